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

#include "plab/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "plab/classify.hpp"
#include "plab/parser.hpp"

namespace plab {

namespace {

std::string fmt2(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

std::string join(const std::vector<std::string>& items, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += separator;
    out += items[i];
  }
  return out;
}

std::string pair_label(const MetricsReport& report, std::size_t i, std::size_t j) {
  return report.product_ids[i] + "," + report.product_ids[j];
}

// IPrR carries a standing footnote: its per-product denominator is the point
// of the metric, and a well-known result table for the three-product door
// ECU data set prints a uniform 0.33 that does not follow from it.
const char* iprr_note =
    "IPrR is |intersection of all products' required components| / |the product's own required "
    "components|. On the bundled door_ecu example data this yields 0.50 for every product; "
    "reference tables for that data set that print a uniform 0.33 are inconsistent with this "
    "definition.";

}  // namespace

const char* to_string(RecommendationKind kind) {
  switch (kind) {
    case RecommendationKind::SeedPair: return "SEED_PAIR";
    case RecommendationKind::RefactorCandidate: return "REFACTOR_CANDIDATE";
    case RecommendationKind::ExclusionCandidate: return "EXCLUSION_CANDIDATE";
    case RecommendationKind::NoPotential: return "NO_POTENTIAL";
    case RecommendationKind::NotMeaningfulPair: return "NOT_MEANINGFUL_PAIR";
  }
  return "UNKNOWN";
}

std::vector<Recommendation> recommend(const MetricsReport& report) {
  std::vector<Recommendation> out;
  const std::size_t n = report.product_ids.size();

  // Seed pair: the pair with the highest relationship ratio, ties broken by
  // the lexicographically smallest id pair. Skipped when nothing overlaps.
  const PairValue* best = nullptr;
  for (const auto& pair : report.rr) {
    if (pair.value.num() == 0) continue;
    if (best == nullptr || Ratio::less(best->value, pair.value)) {
      best = &pair;
    } else if (pair.value == best->value) {
      auto ids = [&](const PairValue& p) {
        return std::minmax(report.product_ids[p.i], report.product_ids[p.j]);
      };
      if (ids(pair) < ids(*best)) best = &pair;
    }
  }
  if (best != nullptr) {
    out.push_back({RecommendationKind::SeedPair,
                   {report.product_ids[best->i], report.product_ids[best->j]},
                   "RR(" + pair_label(report, best->i, best->j) + ") = " + best->value.decimal2() +
                       " is the highest pairwise relationship ratio"});
  }

  // Refactor candidates: strict maximum IR, or IR above tau_ir.
  for (std::size_t i = 0; i < n; ++i) {
    bool strict_max = true;
    for (std::size_t k = 0; k < n && strict_max; ++k) {
      strict_max = k == i || Ratio::less(report.ir[k], report.ir[i]);
    }
    const bool above = report.ir[i].value() > report.config.tau_ir;
    if (!strict_max && !above) continue;
    std::string why = "IR(" + report.product_ids[i] + ") = " + report.ir[i].decimal2();
    if (strict_max) why += " is the highest individualization ratio";
    if (above) {
      why += strict_max ? " and" : "";
      why += " exceeds tau_ir = " + fmt2(report.config.tau_ir);
    }
    out.push_back({RecommendationKind::RefactorCandidate, {report.product_ids[i]}, why});
  }

  // Exclusion candidates: both reusability ratios below their thresholds.
  for (std::size_t i = 0; i < n; ++i) {
    const Ratio& prr = report.prr[i];
    const Ratio& iprr = report.iprr[i];
    if (!prr.is_defined() || !iprr.is_defined()) continue;
    if (prr.value() < report.config.tau_prr && iprr.value() < report.config.tau_iprr) {
      out.push_back({RecommendationKind::ExclusionCandidate,
                     {report.product_ids[i]},
                     "PrR(" + report.product_ids[i] + ") = " + prr.decimal2() + " and IPrR(" +
                         report.product_ids[i] + ") = " + iprr.decimal2() +
                         " are below tau_prr = " + fmt2(report.config.tau_prr) +
                         " and tau_iprr = " + fmt2(report.config.tau_iprr)});
    }
  }

  if (report.soc == 0) {
    out.push_back({RecommendationKind::NoPotential,
                   {},
                   "SoC = 0: no commonly reusable components were identified"});
  }

  for (const auto& pair : report.rb) {
    if (pair.value.is_defined()) continue;
    out.push_back({RecommendationKind::NotMeaningfulPair,
                   {report.product_ids[pair.i], report.product_ids[pair.j]},
                   "RB(" + pair_label(report, pair.i, pair.j) +
                       ") is undefined: the pair shares no components"});
  }

  return out;
}

MetricsReport build_report(const std::vector<ProductGraph>& products, const ReportConfig& config) {
  if (products.size() < 2) {
    throw Error(Errc::too_few_products, "a product line analysis needs at least 2 products, got " +
                                            std::to_string(products.size()));
  }

  MetricsReport report;
  report.config = config;
  report.products = products;

  std::vector<Classification> classifications;
  std::vector<std::string> mismatch_warnings;
  for (const auto& product : products) {
    classifications.push_back(classify_components(product));
    std::string errors;
    for (const auto& diagnostic : validate(product, config.strict)) {
      if (diagnostic.severity == Severity::Error) {
        if (!errors.empty()) errors += "; ";
        errors += to_string(diagnostic);
      } else if (diagnostic.code == diag::classification_mismatch) {
        mismatch_warnings.push_back("product '" + product.product_id + "': " + diagnostic.message);
      }
    }
    if (!errors.empty()) throw Error(Errc::validation_failed, errors);
  }

  ProductSetAnalysis analysis(products, std::move(classifications));
  const std::size_t n = analysis.product_count();
  report.product_ids = analysis.product_ids();
  for (std::size_t i = 0; i < n; ++i) report.component_counts.push_back(analysis.keys(i).size());

  report.soc = size_of_commonality(analysis);
  report.ioc = impact_of_commonality(analysis);
  for (std::size_t i = 0; i < n; ++i) {
    report.prr.push_back(product_related_reusability(analysis, i));
    report.iprr.push_back(impact_of_product_related_reusability(analysis, i));
    report.ir.push_back(individualization_ratio(analysis, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      report.rb.push_back({i, j, reusability_benefit(analysis, i, j)});
      report.rr.push_back({i, j, relationship_ratio(analysis, i, j)});
    }
  }

  ProductSubset everyone;
  for (std::size_t i = 0; i < n; ++i) everyone.insert(i);
  report.shared_all = analysis.lattice().shared_by_all(everyone);

  const auto exact = analysis.lattice().exact_regions();
  std::vector<std::pair<ProductSubset, std::set<ComponentKey>>> regions(exact.begin(), exact.end());
  std::stable_sort(regions.begin(), regions.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  for (auto& [subset, keys] : regions) {
    SharingRegion region;
    for (std::size_t index : subset) region.product_ids.push_back(report.product_ids[index]);
    region.keys.assign(keys.begin(), keys.end());
    report.regions.push_back(std::move(region));
  }

  for (const auto& conflict : commonality_consistency_check(analysis)) {
    report.warnings.push_back("shared component '" + conflict.key.name + "' is required in " +
                              join(conflict.required_in, ", ") + " but optional in " +
                              join(conflict.optional_in, ", "));
  }
  for (auto& warning : mismatch_warnings) report.warnings.push_back(std::move(warning));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& name : analysis.classification(i).isolated) {
      report.warnings.push_back("product '" + report.product_ids[i] + "': component '" + name +
                                "' has no dependency edges; review its relevance manually");
    }
  }

  report.notes.push_back(iprr_note);
  report.recommendations = recommend(report);
  return report;
}

namespace {

std::string render_text(const MetricsReport& report) {
  const std::size_t n = report.product_ids.size();
  const std::size_t pairs = report.rb.size();

  // Grid: label column, "all", one column per product, one per pair.
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"", "all"};
  for (const auto& id : report.product_ids) header.push_back(id);
  for (const auto& pair : report.rb) header.push_back(pair_label(report, pair.i, pair.j));
  grid.push_back(std::move(header));

  const auto blank_row = [&](const std::string& label) {
    std::vector<std::string> row(2 + n + pairs);
    row[0] = label;
    return row;
  };

  auto row = blank_row("components");
  for (std::size_t i = 0; i < n; ++i) row[2 + i] = std::to_string(report.component_counts[i]);
  grid.push_back(row);

  row = blank_row("SoC");
  row[1] = std::to_string(report.soc);
  grid.push_back(row);

  row = blank_row("IoC");
  row[1] = report.ioc.decimal2();
  grid.push_back(row);

  const auto per_product_row = [&](const std::string& label, const std::vector<Ratio>& values) {
    auto r = blank_row(label);
    for (std::size_t i = 0; i < n; ++i) r[2 + i] = values[i].decimal2();
    grid.push_back(r);
  };
  const auto per_pair_row = [&](const std::string& label, const std::vector<PairValue>& values) {
    auto r = blank_row(label);
    for (std::size_t p = 0; p < pairs; ++p) r[2 + n + p] = values[p].value.decimal2();
    grid.push_back(r);
  };

  per_product_row("PrR", report.prr);
  per_product_row("IPrR", report.iprr);
  per_pair_row("RB", report.rb);
  per_pair_row("RR", report.rr);
  per_product_row("IR", report.ir);

  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& cells : grid) {
    for (std::size_t c = 0; c < cells.size(); ++c) widths[c] = std::max(widths[c], cells[c].size());
  }

  std::string out = "product line-ability report for " + std::to_string(n) + " products\n\n";
  for (const auto& cells : grid) {
    std::string line = cells[0];
    line.append(widths[0] - cells[0].size(), ' ');
    for (std::size_t c = 1; c < cells.size(); ++c) {
      line += "  ";
      line.append(widths[c] - cells[c].size(), ' ');
      line += cells[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }

  out += "\nsharing regions (name + effective interface identity):\n";
  for (const auto& region : report.regions) {
    std::vector<std::string> names;
    for (const auto& key : region.keys) names.push_back(key.name);
    out += "  " + join(region.product_ids, ", ") + ": " + join(names, ", ") + '\n';
  }

  out += "\nwarnings:\n";
  if (report.warnings.empty()) out += "  (none)\n";
  for (const auto& warning : report.warnings) out += "  - " + warning + '\n';

  out += "\nrecommendations:\n";
  if (report.recommendations.empty()) out += "  (none)\n";
  for (const auto& rec : report.recommendations) {
    out += "  - ";
    out += to_string(rec.kind);
    if (!rec.subjects.empty()) out += ' ' + join(rec.subjects, ", ");
    out += ": " + rec.rationale + '\n';
  }

  out += "\nnotes:\n";
  for (const auto& note : report.notes) out += "  - " + note + '\n';

  out += "\nconfiguration: tau_ir = " + fmt2(report.config.tau_ir) +
         ", tau_prr = " + fmt2(report.config.tau_prr) +
         ", tau_iprr = " + fmt2(report.config.tau_iprr) +
         ", strict = " + (report.config.strict ? "on" : "off") + "\n";
  return out;
}

nlohmann::ordered_json ratio_json(const Ratio& ratio) {
  if (!ratio.is_defined()) return nullptr;
  nlohmann::ordered_json j;
  j["num"] = ratio.num();
  j["den"] = ratio.den();
  j["rounded"] = ratio.decimal2();
  return j;
}

nlohmann::ordered_json key_json(const ComponentKey& key) {
  nlohmann::ordered_json j;
  j["name"] = key.name;
  auto signatures = nlohmann::ordered_json::array();
  for (const auto& signature : key.interface) signatures.push_back(to_string(signature));
  j["interface"] = std::move(signatures);
  return j;
}

std::string render_machine(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["version"] = 1;

  auto products = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.product_ids.size(); ++i) {
    products.push_back({{"id", report.product_ids[i]}, {"components", report.component_counts[i]}});
  }
  j["products"] = std::move(products);

  j["soc"] = report.soc;
  j["ioc"] = ratio_json(report.ioc);

  auto per_product = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.product_ids.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["id"] = report.product_ids[i];
    entry["prr"] = ratio_json(report.prr[i]);
    entry["iprr"] = ratio_json(report.iprr[i]);
    entry["ir"] = ratio_json(report.ir[i]);
    per_product.push_back(std::move(entry));
  }
  j["per_product"] = std::move(per_product);

  auto pairwise = nlohmann::ordered_json::array();
  for (std::size_t p = 0; p < report.rb.size(); ++p) {
    nlohmann::ordered_json entry;
    entry["pair"] = {report.product_ids[report.rb[p].i], report.product_ids[report.rb[p].j]};
    entry["rb"] = ratio_json(report.rb[p].value);
    entry["rr"] = ratio_json(report.rr[p].value);
    pairwise.push_back(std::move(entry));
  }
  j["pairwise"] = std::move(pairwise);

  auto regions = nlohmann::ordered_json::array();
  for (const auto& region : report.regions) {
    nlohmann::ordered_json entry;
    entry["products"] = region.product_ids;
    auto keys = nlohmann::ordered_json::array();
    for (const auto& key : region.keys) keys.push_back(key_json(key));
    entry["keys"] = std::move(keys);
    regions.push_back(std::move(entry));
  }
  j["regions"] = std::move(regions);

  j["warnings"] = report.warnings;

  auto recommendations = nlohmann::ordered_json::array();
  for (const auto& rec : report.recommendations) {
    nlohmann::ordered_json entry;
    entry["kind"] = to_string(rec.kind);
    entry["subjects"] = rec.subjects;
    entry["rationale"] = rec.rationale;
    recommendations.push_back(std::move(entry));
  }
  j["recommendations"] = std::move(recommendations);

  j["notes"] = report.notes;
  j["config"] = {{"tau_ir", report.config.tau_ir},
                 {"tau_prr", report.config.tau_prr},
                 {"tau_iprr", report.config.tau_iprr},
                 {"strict", report.config.strict}};

  return j.dump(2) + "\n";
}

std::string render_dot(const MetricsReport& report) {
  std::string out;
  bool first = true;
  for (const auto& product : report.products) {
    if (!first) out += '\n';
    first = false;
    out += render_product_dot(product, report.shared_all);
  }
  return out;
}

}  // namespace

std::string render_product_dot(const ProductGraph& product, const std::set<ComponentKey>& marked) {
  // Identifiers are restricted to [A-Za-z0-9_], so plain quoting is enough.
  std::string out = "digraph \"" + product.product_id + "\" {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=box];\n";
  for (const auto& component : product.components) {
    out += "  \"" + component.name + "\"";
    if (marked.count(component_key(product, component.name))) {
      out += " [style=filled, fillcolor=lightgrey, peripheries=2]";
    }
    out += ";\n";
  }
  for (const auto& edge : product.edges) {
    out += "  \"" + edge.source + "\" -> \"" + edge.target + "\"";
    out += " [label=\"" + to_string(edge.signature) + "\"";
    if (edge.optionality == Optionality::Optional) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string render(const MetricsReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return render_text(report);
    case OutputFormat::Machine: return render_machine(report);
    case OutputFormat::Dot: return render_dot(report);
  }
  return {};
}

}  // namespace plab
