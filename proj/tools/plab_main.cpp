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

// plab command line tool. Talks to the library exclusively through the C API
// in plab.h. Exit codes: 0 success, 1 input error (parse/validate), 2 usage
// error, 3 analysis precondition failure.

#include "plab.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

void print_usage(std::ostream& out) {
  plab_options defaults;
  plab_options_init(&defaults);
  out << "usage: plab <command> [options] <file.plp>...\n"
      << "\n"
      << "commands:\n"
      << "  validate <files...> [--strict]\n"
      << "      parse and validate product descriptions; exit 0 iff no errors\n"
      << "  classify <file> [--product ID] [--start NAME[,NAME...]]\n"
      << "      print required/optional/isolated components per product;\n"
      << "      --start overrides the file's start set\n"
      << "  analyze <files...> [--format text|json|dot] [--strict]\n"
      << "          [--tau-ir R] [--tau-prr R] [--tau-iprr R] [--out PATH]\n"
      << "      full product line-ability report (default: text to stdout)\n"
      << "\n"
      << "threshold defaults: --tau-ir " << defaults.tau_ir << ", --tau-prr " << defaults.tau_prr
      << ", --tau-iprr " << defaults.tau_iprr << "\n"
      << "\n"
      << "exit codes: 0 success, 1 input error, 2 usage error, 3 analysis\n"
      << "precondition failure (e.g. fewer than 2 products)\n";
}

int usage_error(const std::string& message) {
  std::cerr << "plab: " << message << "\n";
  print_usage(std::cerr);
  return kExitUsage;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

struct ProductsHandle {
  plab_products* ptr = nullptr;
  ~ProductsHandle() { plab_products_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { plab_string_free(ptr); }
};

void print_diags(const plab_diags* diags, std::set<std::string>& printed) {
  for (size_t i = 0; i < plab_diags_count(diags); ++i) {
    plab_severity severity = PLAB_SEVERITY_WARNING;
    const char* source = nullptr;
    int line = 0;
    const char* code = nullptr;
    const char* message = nullptr;
    if (plab_diags_get(diags, i, &severity, &source, &line, &code, &message) != PLAB_OK) continue;
    std::string text = std::string(source != nullptr && *source != '\0' ? source : "input") + ":" +
                       std::to_string(line) + ": " +
                       (severity == PLAB_SEVERITY_ERROR ? "error " : "warning ") + code + ": " +
                       message;
    if (printed.insert(text).second) std::cerr << text << "\n";
  }
}

// Loads all files into a parsed handle; prints parse diagnostics.
// Returns kExitOk, kExitInput, or kExitUsage.
int load_products(const std::vector<std::string>& files, bool strict, ProductsHandle& handle,
                  std::set<std::string>& printed) {
  if (files.empty()) return usage_error("no input files given");
  std::vector<std::string> texts(files.size());
  std::vector<const char*> text_ptrs;
  std::vector<const char*> name_ptrs;
  for (size_t i = 0; i < files.size(); ++i) {
    if (!read_file(files[i], texts[i])) {
      std::cerr << "plab: cannot read '" << files[i] << "'\n";
      return kExitInput;
    }
    text_ptrs.push_back(texts[i].c_str());
    name_ptrs.push_back(files[i].c_str());
  }
  const plab_status status =
      plab_parse(text_ptrs.data(), name_ptrs.data(), files.size(), strict ? 1 : 0, &handle.ptr);
  if (handle.ptr != nullptr) print_diags(plab_products_diags(handle.ptr), printed);
  if (status == PLAB_OK) return kExitOk;
  if (status == PLAB_ERR_INPUT) return kExitInput;
  std::cerr << "plab: " << plab_last_error() << "\n";
  return kExitInput;
}

int cmd_validate(const std::vector<std::string>& files, bool strict) {
  ProductsHandle handle;
  std::set<std::string> printed;
  int status = load_products(files, strict, handle, printed);
  if (status == kExitUsage) return status;

  plab_diags* validation = nullptr;
  if (handle.ptr != nullptr && plab_validate(handle.ptr, strict ? 1 : 0, &validation) == PLAB_OK) {
    print_diags(validation, printed);
    for (size_t i = 0; i < plab_diags_count(validation); ++i) {
      plab_severity severity = PLAB_SEVERITY_WARNING;
      plab_diags_get(validation, i, &severity, nullptr, nullptr, nullptr, nullptr);
      if (severity == PLAB_SEVERITY_ERROR) status = kExitInput;
    }
  }
  plab_diags_free(validation);
  return status;
}

int cmd_classify(const std::vector<std::string>& files, const std::string& product_filter,
                 const std::vector<std::string>& start_override, bool have_override) {
  if (files.size() != 1) return usage_error("classify takes exactly one file");
  ProductsHandle handle;
  std::set<std::string> printed;
  const int status = load_products(files, false, handle, printed);
  if (status != kExitOk) return status;

  std::vector<const char*> start_ptrs;
  for (const auto& name : start_override) start_ptrs.push_back(name.c_str());

  bool matched = false;
  bool first = true;
  for (size_t i = 0; i < plab_products_count(handle.ptr); ++i) {
    const char* id = plab_product_id(handle.ptr, i);
    if (!product_filter.empty() && product_filter != id) continue;
    matched = true;

    plab_classification* classification = nullptr;
    const plab_status st =
        plab_classify(handle.ptr, i, have_override ? start_ptrs.data() : nullptr,
                      start_ptrs.size(), &classification);
    if (st != PLAB_OK) {
      std::cerr << "plab: " << plab_last_error() << "\n";
      return st == PLAB_ERR_PRECONDITION ? kExitPrecondition : kExitInput;
    }

    if (!first) std::cout << "\n";
    first = false;
    std::cout << "product " << id << "\n";
    const auto print_class = [&](const char* label, plab_class cls) {
      std::cout << label << ":";
      for (size_t k = 0; k < plab_classification_count(classification, cls); ++k) {
        std::cout << ' ' << plab_classification_name(classification, cls, k);
      }
      std::cout << "\n";
    };
    print_class("required", PLAB_CLASS_REQUIRED);
    print_class("optional", PLAB_CLASS_OPTIONAL);
    print_class("isolated", PLAB_CLASS_ISOLATED);
    plab_classification_free(classification);
  }

  if (!matched) {
    std::cerr << "plab: no product " << (product_filter.empty() ? "found" : "'" + product_filter + "'")
              << " in " << files[0] << "\n";
    return kExitInput;
  }
  return kExitOk;
}

int cmd_analyze(const std::vector<std::string>& files, const plab_options& options,
                plab_format format, const std::string& out_path) {
  ProductsHandle handle;
  std::set<std::string> printed;
  const int status = load_products(files, options.strict != 0, handle, printed);
  if (status != kExitOk) return status;

  plab_report* report = nullptr;
  const plab_status st = plab_analyze(handle.ptr, &options, &report);
  if (st != PLAB_OK) {
    std::cerr << "plab: " << plab_last_error() << "\n";
    return st == PLAB_ERR_PRECONDITION ? kExitPrecondition : kExitInput;
  }

  StringHandle text;
  plab_report_render(report, format, &text.ptr);
  plab_report_free(report);
  if (text.ptr == nullptr) {
    std::cerr << "plab: " << plab_last_error() << "\n";
    return kExitInput;
  }

  if (out_path.empty()) {
    std::cout << text.ptr;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text.ptr)) {
      std::cerr << "plab: cannot write '" << out_path << "'\n";
      return kExitInput;
    }
  }
  return kExitOk;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    print_usage(args.empty() ? std::cerr : std::cout);
    return args.empty() ? kExitUsage : kExitOk;
  }
  if (args[0] == "--version") {
    std::cout << "plab " << plab_version() << "\n";
    return kExitOk;
  }

  const std::string command = args[0];
  std::vector<std::string> files;
  bool strict = false;
  std::string product_filter;
  std::vector<std::string> start_override;
  bool have_override = false;
  plab_options options;
  plab_options_init(&options);
  plab_format format = PLAB_FORMAT_TEXT;
  std::string out_path;

  const auto next_value = [&](size_t& i, const char* flag, std::string& value) {
    if (i + 1 >= args.size()) {
      usage_error(std::string(flag) + " needs a value");
      return false;
    }
    value = args[++i];
    return true;
  };

  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& arg = args[i];
    std::string value;
    if (arg == "--help" || arg == "-h") {
      print_usage(std::cout);
      return kExitOk;
    } else if (arg == "--strict") {
      strict = true;
      options.strict = 1;
    } else if (arg == "--product") {
      if (!next_value(i, "--product", product_filter)) return kExitUsage;
    } else if (arg == "--start") {
      if (!next_value(i, "--start", value)) return kExitUsage;
      start_override = split_commas(value);
      have_override = true;
      if (start_override.empty()) return usage_error("--start needs at least one name");
    } else if (arg == "--format") {
      if (!next_value(i, "--format", value)) return kExitUsage;
      if (value == "text") format = PLAB_FORMAT_TEXT;
      else if (value == "json") format = PLAB_FORMAT_JSON;
      else if (value == "dot") format = PLAB_FORMAT_DOT;
      else return usage_error("unknown format '" + value + "'");
    } else if (arg == "--out") {
      if (!next_value(i, "--out", out_path)) return kExitUsage;
    } else if (arg == "--tau-ir" || arg == "--tau-prr" || arg == "--tau-iprr") {
      if (!next_value(i, arg.c_str(), value)) return kExitUsage;
      char* end = nullptr;
      const double parsed = std::strtod(value.c_str(), &end);
      if (end == value.c_str() || *end != '\0' || parsed < 0.0 || parsed > 1.0) {
        return usage_error(arg + " needs a number in [0, 1]");
      }
      if (arg == "--tau-ir") options.tau_ir = parsed;
      else if (arg == "--tau-prr") options.tau_prr = parsed;
      else options.tau_iprr = parsed;
    } else if (!arg.empty() && arg[0] == '-') {
      return usage_error("unknown option '" + arg + "'");
    } else {
      files.push_back(arg);
    }
  }

  if (command == "validate") return cmd_validate(files, strict);
  if (command == "classify") return cmd_classify(files, product_filter, start_override, have_override);
  if (command == "analyze") return cmd_analyze(files, options, format, out_path);
  return usage_error("unknown command '" + command + "'");
}
