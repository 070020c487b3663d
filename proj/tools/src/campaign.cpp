// Copyright 2026 The anymask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anymask_cli/campaign.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "anymask/braid.hpp"
#include "anymask/latin.hpp"
#include "anymask/teleport.hpp"

#ifndef ANYMASK_VERSION
#define ANYMASK_VERSION "0.0.0"
#endif

namespace anymask::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string num(double v, int precision = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string complex_text(Amplitude a) {
    if (a.imag() == 0.0) return num(a.real(), 6);
    if (a.real() == 0.0) return num(a.imag(), 6) + "i";
    return num(a.real(), 6) + (a.imag() < 0 ? "-" : "+") + num(std::abs(a.imag()), 6) + "i";
}

Json complex_json(Amplitude a) { return Json::array({a.real(), a.imag()}); }

Json coeffs_json(std::span<const Amplitude> coeffs) {
    Json arr = Json::array();
    for (auto c : coeffs) arr.push_back(complex_json(c));
    return arr;
}

Json matrix_json(const DensityMatrix& rho) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < rho.dim(); ++j) row.push_back(complex_json(rho(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json state_json(const StateVector& state) {
    Json terms = Json::array();
    for (const auto& [ket, amp] : state.terms()) {
        terms.push_back(Json{{"ket", to_string(ket)}, {"amplitude", complex_json(amp)}});
    }
    return terms;
}

std::string matrix_text(const DensityMatrix& rho, const std::string& indent) {
    std::string out;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        out += indent;
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            Amplitude v = rho(i, j);
            if (std::abs(v) < 1e-15) v = 0.0;
            std::string cell = complex_text(v);
            cell.resize(std::max<std::size_t>(cell.size(), 10), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

const char kParties[] = {'A', 'B', 'C'};

std::size_t worst_party(const MaskingReport& r) {
    return static_cast<std::size_t>(std::max_element(r.deviations.begin(), r.deviations.end()) -
                                    r.deviations.begin());
}

std::string scheme_label(const AnyonModel& model, std::string_view selector) {
    if (!selector.empty()) return std::string(selector);
    return model.kind() == ModelKind::abelian_c0 ? "paper-d4" : "cyclic-d3";
}

Json config_json(const CampaignConfig& c, const AnyonModel& model) {
    return Json{{"model", model.name()},
                {"scheme", scheme_label(model, c.scheme)},
                {"trials", c.trials},
                {"seed", c.seed},
                {"tol", c.tol}};
}

std::vector<Amplitude> normalized(std::vector<Amplitude> coeffs, std::vector<std::string>& warnings) {
    double n2 = 0.0;
    for (auto c : coeffs) n2 += std::norm(c);
    if (n2 == 0.0) throw UsageError("input vector is zero");
    if (std::abs(n2 - 1.0) > kDefaultTolerance) {
        warnings.push_back("input norm is " + num(std::sqrt(n2), 6) + "; normalizing");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& c : coeffs) c *= inv;
    }
    return coeffs;
}

double parse_real(std::string_view text, std::string_view literal) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw UsageError("unparsable complex literal '" + std::string(literal) + "'");
    }
    return value;
}

}  // namespace

std::string_view version() { return ANYMASK_VERSION; }

AnyonModel resolve_model(std::string_view selector) {
    try {
        return model_from_name(selector);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

MaskingScheme resolve_scheme(const AnyonModel& model, std::string_view selector) {
    try {
        if (selector.empty()) return default_scheme(model);
        if (selector == "paper-d4") return MaskingScheme(model, fixed_triple_d4());
        if (selector == "cyclic-d3") return MaskingScheme(model, cyclic_triple(3));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("scheme ") + std::string(selector) + ": " + e.what());
    }
    std::ifstream in{std::string(selector)};
    if (!in) throw UsageError("cannot open scheme file '" + std::string(selector) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return MaskingScheme(model, parse_scheme(buf.str(), model.alphabet()));
    } catch (const std::exception& e) {
        throw UsageError("invalid scheme file '" + std::string(selector) + "': " + e.what());
    }
}

void validate(const CampaignConfig& config) {
    if (config.trials < 1) throw UsageError("trials must be at least 1");
    if (!(config.tol > 0.0)) throw UsageError("tol must be positive");
    if (config.threads < 1) throw UsageError("threads must be at least 1");
    resolve_model(config.model);
}

std::optional<std::uint64_t> seed_from_env(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return std::nullopt;
    std::string_view text = trim(raw);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(std::string(name) + " is not an unsigned integer: '" + raw + "'");
    }
    return value;
}

Amplitude parse_complex(std::string_view literal) {
    std::string_view s = trim(literal);
    if (s.empty()) throw UsageError("empty complex literal");
    if (s.back() != 'i') return {parse_real(s, literal), 0.0};

    s.remove_suffix(1);
    // The split sign is the last +/- that is neither leading nor an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re_text = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
    std::string_view im_text = split == std::string_view::npos ? s : s.substr(split);
    double im = 0.0;
    if (im_text.empty() || im_text == "+") im = 1.0;
    else if (im_text == "-") im = -1.0;
    else im = parse_real(im_text, literal);
    const double re = re_text.empty() ? 0.0 : parse_real(re_text, literal);
    return {re, im};
}

std::vector<Amplitude> parse_complex_list(std::string_view text) {
    std::vector<Amplitude> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_complex(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------

CommandResult run_verify(const CampaignConfig& config,
                         const std::optional<std::vector<Amplitude>>& input) {
    validate(config);
    const AnyonModel model = resolve_model(config.model);
    const MaskingScheme scheme = resolve_scheme(model, config.scheme);
    const std::size_t d = scheme.order();

    CommandResult result;
    std::vector<Amplitude> fixed;
    if (input) {
        if (input->size() != d) {
            throw UsageError("input has " + std::to_string(input->size()) + " coefficients, scheme needs " +
                             std::to_string(d));
        }
        fixed = normalized(*input, result.warnings);
    }
    const std::size_t trials = input ? 1 : config.trials;

    auto run_trial = [&](std::size_t t) {
        if (input) return verify_masking(scheme.encode(fixed), scheme.alphabet(), config.tol);
        const std::uint64_t s = trial_seed(config.seed, t);
        auto report = verify_masking(scheme.encode(random_unit_coeffs(d, s)), scheme.alphabet(), config.tol);
        report.seed = s;
        return report;
    };

    struct TrialSummary {
        std::array<double, 3> deviations{};
        std::optional<std::uint64_t> seed;
        bool passed = false;
    };
    std::vector<TrialSummary> summaries(trials);
    auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t t = begin; t < trials; t += stride) {
            auto r = run_trial(t);
            summaries[t] = {r.deviations, r.seed, r.passed};
        }
    };
    const std::size_t nthreads = std::min<std::size_t>(config.threads, trials);
    if (nthreads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < nthreads; ++w) pool.emplace_back(worker, w, nthreads);
        for (auto& th : pool) th.join();
    }

    std::size_t worst = 0;
    double max_dev = -1.0;
    bool all_passed = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto& s = summaries[t];
        const double dev = *std::max_element(s.deviations.begin(), s.deviations.end());
        if (dev > max_dev) {
            max_dev = dev;
            worst = t;
        }
        all_passed = all_passed && s.passed;
    }
    const MaskingReport worst_report = run_trial(worst);
    result.exit_code = all_passed ? kExitPass : kExitCheckFailed;

    Json cfg = config_json(config, model);
    cfg["trials"] = trials;
    cfg["input"] = input ? coeffs_json(fixed) : Json(nullptr);
    Json per_trial = Json::array();
    for (std::size_t t = 0; t < trials; ++t) {
        const auto& s = summaries[t];
        const auto p = static_cast<std::size_t>(
            std::max_element(s.deviations.begin(), s.deviations.end()) - s.deviations.begin());
        per_trial.push_back(Json{{"trial", t},
                                 {"seed", s.seed ? Json(*s.seed) : Json(nullptr)},
                                 {"worst_deviation", s.deviations[p]},
                                 {"party", std::string(1, kParties[p])}});
    }
    Json marginals = Json::array();
    for (const auto& m : worst_report.marginals) marginals.push_back(matrix_json(m));
    Json doc{{"command", "verify"},
             {"version", version()},
             {"config", std::move(cfg)},
             {"trials", std::move(per_trial)},
             {"max_deviation", max_dev},
             {"worst",
              {{"trial", worst},
               {"deviations", worst_report.deviations},
               {"pair_deviations", worst_report.pair_deviations},
               {"marginals", std::move(marginals)}}},
             {"verdict", all_passed ? "pass" : "fail"}};
    result.structured = dump(doc);

    std::ostringstream os;
    os << "verify  model=" << model.name() << "  scheme=" << scheme_label(model, config.scheme)
       << "  trials=" << trials << "  seed=" << config.seed << "  tol=" << num(config.tol) << '\n';
    if (input) {
        os << "input  (";
        for (std::size_t j = 0; j < d; ++j) os << (j ? ", " : "") << complex_text(fixed[j]);
        os << ")\n";
    }
    os << "worst trial " << worst << ":";
    for (std::size_t p = 0; p < 3; ++p) os << "  " << kParties[p] << '=' << num(worst_report.deviations[p]);
    os << '\n';
    for (std::size_t p = 0; p < 3; ++p) {
        os << "marginal " << kParties[p] << ":\n" << matrix_text(worst_report.marginals[p], "  ");
    }
    os << "max deviation " << num(max_dev) << " (party " << kParties[worst_party(worst_report)] << ")\n";
    os << "verdict " << (all_passed ? "PASS" : "FAIL") << '\n';
    result.text = os.str();
    return result;
}

CommandResult run_braid(const CampaignConfig& config, std::string_view ops_text) {
    validate(config);
    const AnyonModel model = resolve_model(config.model);
    const MaskingScheme scheme = resolve_scheme(model, config.scheme);

    BraidReport report;
    try {
        const auto ops = parse_ops(ops_text);
        report = verify_invariance(scheme, ops, config.trials, config.tol, config.seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("braid: ") + e.what());
    }

    CommandResult result;
    result.exit_code = report.passed ? kExitPass : kExitCheckFailed;
    const std::string ops = format_ops(report.ops);
    Json cfg = config_json(config, model);
    cfg["ops"] = ops;
    Json doc{{"command", "braid"},
             {"version", version()},
             {"config", std::move(cfg)},
             {"pre_max_deviation", report.pre_worst.max_deviation()},
             {"post_max_deviation", report.post_worst.max_deviation()},
             {"post_worst",
              {{"seed", report.post_worst.seed ? Json(*report.post_worst.seed) : Json(nullptr)},
               {"deviations", report.post_worst.deviations}}},
             {"unitarity_defect", report.unitarity_defect},
             {"verdict", report.passed ? "pass" : "fail"}};
    result.structured = dump(doc);

    std::ostringstream os;
    os << "braid  model=" << model.name() << "  scheme=" << scheme_label(model, config.scheme)
       << "  ops=" << ops << "  trials=" << config.trials << "  seed=" << config.seed
       << "  tol=" << num(config.tol) << '\n';
    os << "before ops: max deviation " << num(report.pre_worst.max_deviation()) << '\n';
    os << "after ops:  max deviation " << num(report.post_worst.max_deviation()) << '\n';
    os << "norm defect " << num(report.unitarity_defect) << '\n';
    os << "verdict " << (report.passed ? "PASS" : "FAIL") << '\n';
    result.text = os.str();
    return result;
}

CommandResult run_mols(std::size_t order) {
    std::optional<std::pair<Square, Square>> pair;
    try {
        pair = find_mols_pair(order);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("mols: ") + e.what());
    }

    auto grid_json = [](const Square& s) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < s.order(); ++r) {
            Json row = Json::array();
            for (auto v : s.row(r)) row.push_back(static_cast<int>(v));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    auto grid_text = [](const Square& s) {
        std::string out;
        for (std::size_t r = 0; r < s.order(); ++r) {
            for (std::size_t k = 0; k < s.order(); ++k) {
                if (k) out += ' ';
                out += std::to_string(s.at(r, k));
            }
            out += '\n';
        }
        return out;
    };

    CommandResult result;
    Json doc{{"command", "mols"}, {"version", version()}, {"config", {{"dim", order}}}};
    if (pair) {
        const bool ok = is_latin(pair->first) && is_latin(pair->second) &&
                        are_orthogonal(pair->first, pair->second);
        result.exit_code = ok ? kExitPass : kExitCheckFailed;
        doc["found"] = true;
        doc["squares"] = Json::array({grid_json(pair->first), grid_json(pair->second)});
        doc["verdict"] = ok ? "pass" : "fail";
        result.text = "mols  dim=" + std::to_string(order) + "\n" + grid_text(pair->first) + "\n" +
                      grid_text(pair->second);
    } else {
        doc["found"] = false;
        doc["squares"] = nullptr;
        doc["verdict"] = "pass";
        result.text = "mols  dim=" + std::to_string(order) + "\nnone\n";
    }
    result.structured = dump(doc);
    return result;
}

CommandResult run_teleport(const CampaignConfig& config, std::string_view input) {
    if (!(config.tol > 0.0)) throw UsageError("tol must be positive");
    auto coeffs = parse_complex_list(input);
    if (coeffs.size() != 3) {
        throw UsageError("teleport: expected 3 coefficients, got " + std::to_string(coeffs.size()));
    }
    CommandResult result;
    coeffs = normalized(std::move(coeffs), result.warnings);
    const auto run = teleport::run_teleport(coeffs);
    const bool ok = run.passed(config.tol);
    result.exit_code = ok ? kExitPass : kExitCheckFailed;

    Json outcomes = Json::array();
    for (const auto& o : run.outcomes) {
        outcomes.push_back(Json{{"outcome", o.outcome},
                                {"probability", o.probability},
                                {"bob", state_json(o.bob)},
                                {"correction", o.correction},
                                {"corrected", state_json(o.corrected)},
                                {"fidelity", o.fidelity}});
    }
    Json doc{{"command", "teleport"},
             {"version", version()},
             {"config", {{"input", coeffs_json(coeffs)}, {"tol", config.tol}}},
             {"bob_marginal_deviation", run.bob_marginal_deviation},
             {"outcomes", std::move(outcomes)},
             {"probability_sum", run.probability_sum},
             {"verdict", ok ? "pass" : "fail"}};
    result.structured = dump(doc);

    std::ostringstream os;
    os << "teleport  input=(" << complex_text(coeffs[0]) << ", " << complex_text(coeffs[1]) << ", "
       << complex_text(coeffs[2]) << ")\n";
    os << "bob marginal before measurement: distance to I/3 " << num(run.bob_marginal_deviation) << '\n';
    for (const auto& o : run.outcomes) {
        os << "outcome " << o.outcome << "  p=" << num(o.probability, 6) << "  bob=" << to_string(o.bob)
           << "\n           correction " << o.correction << " -> " << to_string(o.corrected)
           << "  fidelity " << num(o.fidelity, 12) << '\n';
    }
    os << "probability sum " << num(run.probability_sum, 12) << '\n';
    os << "verdict " << (ok ? "PASS" : "FAIL") << '\n';
    result.text = os.str();
    return result;
}

CommandResult run_model(const CampaignConfig& config, const std::string& file) {
    AnyonModel model = AnyonModel::abelian();
    if (file.empty()) {
        model = resolve_model(config.model);
    } else {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open model file '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            model = parse_model(buf.str());
        } catch (const std::exception& e) {
            throw UsageError("invalid model file '" + file + "': " + e.what());
        }
    }
    const auto report = validate_model(model);

    CommandResult result;
    result.exit_code = report.passed() ? kExitPass : kExitCheckFailed;
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back({{"check", v.check}, {"detail", v.detail}});
    Json doc{{"command", "model"},
             {"version", version()},
             {"config", {{"model", model.name()}, {"file", file.empty() ? Json(nullptr) : Json(file)}}},
             {"tables", serialize_model(model)},
             {"violations", std::move(violations)},
             {"verdict", report.passed() ? "pass" : "fail"}};
    result.structured = dump(doc);

    std::string text = serialize_model(model);
    for (const auto& v : report.violations) text += "violation " + v.check + ": " + v.detail + "\n";
    text += std::string("verdict ") + (report.passed() ? "PASS" : "FAIL") + "\n";
    result.text = std::move(text);
    return result;
}

}  // namespace anymask::cli
