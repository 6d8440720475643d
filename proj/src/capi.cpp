//------------------------------------------------------------------------------
//
//   Copyright 2026 The plab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "plab.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "plab/classify.hpp"
#include "plab/model.hpp"
#include "plab/parser.hpp"
#include "plab/report.hpp"

namespace {

thread_local std::string g_last_error = "no error";

void set_error(std::string message) { g_last_error = std::move(message); }

plab_status status_for(const plab::Error& error) {
  switch (error.code()) {
    case plab::Errc::bad_index:
    case plab::Errc::same_product:
    case plab::Errc::empty_subset:
    case plab::Errc::unknown_component:
      return PLAB_ERR_ARGUMENT;
    case plab::Errc::too_few_products:
    case plab::Errc::too_many_products:
    case plab::Errc::no_classification_basis:
    case plab::Errc::start_not_found:
      return PLAB_ERR_PRECONDITION;
    case plab::Errc::invalid_signature:
    case plab::Errc::validation_failed:
    case plab::Errc::io:
      return PLAB_ERR_INPUT;
  }
  return PLAB_ERR_INTERNAL;
}

// Wraps an API body; any escaping exception becomes a status code.
template <typename Fn>
plab_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const plab::Error& error) {
    set_error(error.what());
    return status_for(error);
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return PLAB_ERR_NOMEM;
  } catch (const std::exception& error) {
    set_error(error.what());
    return PLAB_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return PLAB_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

struct plab_diags {
  std::vector<plab::ParseDiagnostic> items;
};

struct plab_products {
  std::vector<plab::ProductGraph> products;
  plab_diags diags;
};

struct plab_classification {
  std::vector<std::string> required;
  std::vector<std::string> optional;
  std::vector<std::string> isolated;
};

struct plab_report {
  plab::MetricsReport report;
};

extern "C" {

const char* plab_version(void) { return "0.1.0"; }

const char* plab_last_error(void) { return g_last_error.c_str(); }

void plab_options_init(plab_options* options) {
  if (options == nullptr) return;
  const plab::ReportConfig defaults;
  options->tau_ir = defaults.tau_ir;
  options->tau_prr = defaults.tau_prr;
  options->tau_iprr = defaults.tau_iprr;
  options->strict = defaults.strict ? 1 : 0;
}

void plab_string_free(char* text) { delete[] text; }

plab_status plab_parse(const char* const* texts, const char* const* names, size_t count, int strict,
                       plab_products** out) {
  if (out != nullptr) *out = nullptr;
  if (texts == nullptr || count == 0 || out == nullptr) {
    set_error("plab_parse: texts and out must be non-null and count positive");
    return PLAB_ERR_ARGUMENT;
  }
  return guarded([&]() {
    std::vector<plab::NamedSource> sources;
    for (size_t i = 0; i < count; ++i) {
      if (texts[i] == nullptr || (names != nullptr && names[i] == nullptr)) {
        set_error("plab_parse: input " + std::to_string(i) + " is null");
        return PLAB_ERR_ARGUMENT;
      }
      sources.push_back({names != nullptr ? names[i] : "", texts[i]});
    }
    plab::ParseResult parsed = plab::parse_products(sources, strict != 0);
    auto handle = std::make_unique<plab_products>();
    handle->products = std::move(parsed.products);
    handle->diags.items = std::move(parsed.diagnostics);
    const bool ok = std::none_of(
        handle->diags.items.begin(), handle->diags.items.end(),
        [](const plab::ParseDiagnostic& d) { return d.severity == plab::Severity::Error; });
    *out = handle.release();
    if (!ok) {
      set_error("input contained parse errors; see diagnostics");
      return PLAB_ERR_INPUT;
    }
    return PLAB_OK;
  });
}

void plab_products_free(plab_products* products) { delete products; }

size_t plab_products_count(const plab_products* products) {
  return products == nullptr ? 0 : products->products.size();
}

const char* plab_product_id(const plab_products* products, size_t index) {
  if (products == nullptr || index >= products->products.size()) return nullptr;
  return products->products[index].product_id.c_str();
}

int plab_products_ok(const plab_products* products) {
  if (products == nullptr) return 0;
  return std::none_of(products->diags.items.begin(), products->diags.items.end(),
                      [](const plab::ParseDiagnostic& d) {
                        return d.severity == plab::Severity::Error;
                      })
             ? 1
             : 0;
}

const plab_diags* plab_products_diags(const plab_products* products) {
  return products == nullptr ? nullptr : &products->diags;
}

plab_status plab_serialize(const plab_products* products, char** out_text) {
  if (out_text != nullptr) *out_text = nullptr;
  if (products == nullptr || out_text == nullptr) {
    set_error("plab_serialize: null argument");
    return PLAB_ERR_ARGUMENT;
  }
  return guarded([&]() {
    *out_text = copy_string(plab::serialize_products(products->products));
    return PLAB_OK;
  });
}

size_t plab_diags_count(const plab_diags* diags) {
  return diags == nullptr ? 0 : diags->items.size();
}

plab_status plab_diags_get(const plab_diags* diags, size_t index, plab_severity* severity,
                           const char** source, int* line, const char** code,
                           const char** message) {
  if (diags == nullptr || index >= diags->items.size()) {
    set_error("plab_diags_get: bad handle or index");
    return PLAB_ERR_ARGUMENT;
  }
  const plab::ParseDiagnostic& d = diags->items[index];
  if (severity != nullptr) {
    *severity = d.severity == plab::Severity::Error ? PLAB_SEVERITY_ERROR : PLAB_SEVERITY_WARNING;
  }
  if (source != nullptr) *source = d.source.c_str();
  if (line != nullptr) *line = d.line;
  if (code != nullptr) *code = d.code.c_str();
  if (message != nullptr) *message = d.message.c_str();
  return PLAB_OK;
}

void plab_diags_free(plab_diags* diags) { delete diags; }

plab_status plab_validate(const plab_products* products, int strict, plab_diags** out) {
  if (out != nullptr) *out = nullptr;
  if (products == nullptr || out == nullptr) {
    set_error("plab_validate: null argument");
    return PLAB_ERR_ARGUMENT;
  }
  return guarded([&]() {
    auto handle = std::make_unique<plab_diags>();
    for (const auto& product : products->products) {
      for (auto& diagnostic : plab::validate(product, strict != 0)) {
        handle->items.push_back(std::move(diagnostic));
      }
    }
    *out = handle.release();
    return PLAB_OK;
  });
}

plab_status plab_classify(const plab_products* products, size_t index,
                          const char* const* start_override, size_t start_count,
                          plab_classification** out) {
  if (out != nullptr) *out = nullptr;
  if (products == nullptr || out == nullptr || index >= products->products.size()) {
    set_error("plab_classify: bad handle or product index");
    return PLAB_ERR_ARGUMENT;
  }
  return guarded([&]() {
    std::optional<std::vector<std::string>> override_names;
    if (start_override != nullptr) {
      override_names.emplace();
      for (size_t i = 0; i < start_count; ++i) {
        if (start_override[i] == nullptr) {
          set_error("plab_classify: start name " + std::to_string(i) + " is null");
          return PLAB_ERR_ARGUMENT;
        }
        override_names->push_back(start_override[i]);
      }
    }
    const plab::Classification classification =
        plab::classify_components(products->products[index], override_names);
    auto handle = std::make_unique<plab_classification>();
    handle->required.assign(classification.required.begin(), classification.required.end());
    handle->optional.assign(classification.optional.begin(), classification.optional.end());
    handle->isolated.assign(classification.isolated.begin(), classification.isolated.end());
    *out = handle.release();
    return PLAB_OK;
  });
}

namespace {

const std::vector<std::string>* class_list(const plab_classification* classification,
                                           plab_class cls) {
  if (classification == nullptr) return nullptr;
  switch (cls) {
    case PLAB_CLASS_REQUIRED: return &classification->required;
    case PLAB_CLASS_OPTIONAL: return &classification->optional;
    case PLAB_CLASS_ISOLATED: return &classification->isolated;
  }
  return nullptr;
}

}  // namespace

size_t plab_classification_count(const plab_classification* classification, plab_class cls) {
  const auto* list = class_list(classification, cls);
  return list == nullptr ? 0 : list->size();
}

const char* plab_classification_name(const plab_classification* classification, plab_class cls,
                                     size_t index) {
  const auto* list = class_list(classification, cls);
  if (list == nullptr || index >= list->size()) return nullptr;
  return (*list)[index].c_str();
}

void plab_classification_free(plab_classification* classification) { delete classification; }

plab_status plab_analyze(const plab_products* products, const plab_options* options,
                         plab_report** out) {
  if (out != nullptr) *out = nullptr;
  if (products == nullptr || out == nullptr) {
    set_error("plab_analyze: null argument");
    return PLAB_ERR_ARGUMENT;
  }
  return guarded([&]() {
    plab::ReportConfig config;
    if (options != nullptr) {
      config.tau_ir = options->tau_ir;
      config.tau_prr = options->tau_prr;
      config.tau_iprr = options->tau_iprr;
      config.strict = options->strict != 0;
    }
    auto handle = std::make_unique<plab_report>();
    handle->report = plab::build_report(products->products, config);
    *out = handle.release();
    return PLAB_OK;
  });
}

plab_status plab_report_render(const plab_report* report, plab_format format, char** out_text) {
  if (out_text != nullptr) *out_text = nullptr;
  if (report == nullptr || out_text == nullptr) {
    set_error("plab_report_render: null argument");
    return PLAB_ERR_ARGUMENT;
  }
  plab::OutputFormat fmt;
  switch (format) {
    case PLAB_FORMAT_TEXT: fmt = plab::OutputFormat::Text; break;
    case PLAB_FORMAT_JSON: fmt = plab::OutputFormat::Machine; break;
    case PLAB_FORMAT_DOT: fmt = plab::OutputFormat::Dot; break;
    default:
      set_error("plab_report_render: unknown format");
      return PLAB_ERR_ARGUMENT;
  }
  return guarded([&]() {
    *out_text = copy_string(plab::render(report->report, fmt));
    return PLAB_OK;
  });
}

plab_status plab_report_metric(const plab_report* report, plab_metric metric, size_t i, size_t j,
                               unsigned long long* num, unsigned long long* den, int* defined) {
  if (report == nullptr || defined == nullptr) {
    set_error("plab_report_metric: null argument");
    return PLAB_ERR_ARGUMENT;
  }
  const plab::MetricsReport& r = report->report;
  const size_t n = r.product_ids.size();

  const auto write = [&](const plab::Ratio& ratio) {
    *defined = ratio.is_defined() ? 1 : 0;
    if (ratio.is_defined()) {
      if (num != nullptr) *num = ratio.num();
      if (den != nullptr) *den = ratio.den();
    }
    return PLAB_OK;
  };
  const auto pair_cell = [&](const std::vector<plab::PairValue>& cells) -> const plab::Ratio* {
    for (const auto& cell : cells) {
      if ((cell.i == i && cell.j == j) || (cell.i == j && cell.j == i)) return &cell.value;
    }
    return nullptr;
  };

  switch (metric) {
    case PLAB_METRIC_SOC:
      *defined = 1;
      if (num != nullptr) *num = r.soc;
      if (den != nullptr) *den = 1;
      return PLAB_OK;
    case PLAB_METRIC_IOC:
      return write(r.ioc);
    case PLAB_METRIC_PRR:
    case PLAB_METRIC_IPRR:
    case PLAB_METRIC_IR: {
      if (i >= n) {
        set_error("plab_report_metric: product index out of range");
        return PLAB_ERR_ARGUMENT;
      }
      const auto& values = metric == PLAB_METRIC_PRR ? r.prr
                           : metric == PLAB_METRIC_IPRR ? r.iprr
                                                        : r.ir;
      return write(values[i]);
    }
    case PLAB_METRIC_RB:
    case PLAB_METRIC_RR: {
      const plab::Ratio* cell = pair_cell(metric == PLAB_METRIC_RB ? r.rb : r.rr);
      if (cell == nullptr) {
        set_error("plab_report_metric: no such product pair");
        return PLAB_ERR_ARGUMENT;
      }
      return write(*cell);
    }
  }
  set_error("plab_report_metric: unknown metric");
  return PLAB_ERR_ARGUMENT;
}

void plab_report_free(plab_report* report) { delete report; }

}  // extern "C"
