// Copyright 2026 The meshpat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MESHPAT_TOOLS_CLI_HPP
#define MESHPAT_TOOLS_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <meshpat/battery.hpp>
#include <meshpat/meshpat.hpp>

namespace meshpat::cli
{

enum exit_code : int { ok = 0, mismatch = 1, usage = 2 };

namespace detail
{

inline std::string series_tsv(const Series &s)
{
    std::ostringstream os;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        os << n << '\t';
        const auto cs = s[n].coeffs();
        if (cs.empty()) {
            os << '0';
        }
        for (std::size_t d = 0; d < cs.size(); ++d) {
            os << (d ? " " : "") << cs[d].str();
        }
        os << '\n';
    }
    return os.str();
}

// A catalog id or pattern text.
inline MeshPattern resolve_pattern(const std::string &text)
{
    for (const auto &[id, body] : catalog_entries) {
        if (text == id) {
            return parse_mesh_pattern(body);
        }
    }
    return parse_mesh_pattern(text);
}

inline std::vector<InnerSpec> parse_inners(const std::vector<std::string> &texts)
{
    std::vector<InnerSpec> out;
    for (const auto &t : texts) {
        out.push_back(parse_inner(t));
    }
    return out;
}

} // namespace detail

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Mesh-pattern occurrence counting, pattern families, series and oracle checks", "meshpat"};
    app.require_subcommand(1);

    std::size_t order = 8;
    std::size_t max_n = 7;
    unsigned threads = 0;
    bool json = false;
    std::vector<std::string> inner_texts;
    std::optional<std::size_t> k;
    std::string pattern_text, perm_text, family_text, catalog_id;

    const auto add_common = [&](CLI::App *sub) {
        sub->add_flag("--json", json, "Machine-readable output")->envname("MESHPAT_JSON");
        sub->add_option("--threads", threads, "Oracle workers (0: available parallelism)")
            ->envname("MESHPAT_THREADS");
    };
    const auto add_family = [&](CLI::App *sub) {
        sub->add_option("family", family_text, "Family id, e.g. 19, staircase:3, 34-2:2")->required();
        sub->add_option("--inner", inner_texts, "Inner pattern: 'empty', a catalog id, or pattern text");
        sub->add_option("--k", k, "Family parameter k");
    };
    const auto add_max_n = [&](CLI::App *sub) {
        sub->add_option("--max-n", max_n, "Largest n for the oracle")->envname("MESHPAT_MAX_N")
            ->check(CLI::Range(0, 20));
    };

    auto *count = app.add_subcommand("count", "Occurrence count of PATTERN in PERM");
    count->add_option("pattern", pattern_text)->required();
    count->add_option("perm", perm_text)->required();
    add_common(count);

    auto *occs = app.add_subcommand("occurrences", "Occurrence position sets (1-based)");
    occs->add_option("pattern", pattern_text)->required();
    occs->add_option("perm", perm_text)->required();
    add_common(occs);

    auto *dist = app.add_subcommand("dist", "Occurrence distribution table by brute force");
    dist->add_option("pattern", pattern_text)->required();
    add_max_n(dist);
    add_common(dist);

    auto *avoid = app.add_subcommand("avoid", "Avoider counts by brute force");
    avoid->add_option("pattern", pattern_text)->required();
    add_max_n(avoid);
    add_common(avoid);

    auto *formula = app.add_subcommand("formula", "Family series truncated at --order");
    add_family(formula);
    formula->add_option("--order", order, "Truncation order")->envname("MESHPAT_ORDER")->check(CLI::Range(0, 60));
    add_common(formula);

    auto *build = app.add_subcommand("build", "The family pattern with the inners inserted");
    add_family(build);
    add_common(build);

    auto *verify = app.add_subcommand("verify", "Family formula against the oracle");
    add_family(verify);
    add_max_n(verify);
    add_common(verify);

    auto *catalog = app.add_subcommand("catalog", "Named patterns");
    catalog->add_option("id", catalog_id);
    add_common(catalog);

    auto *selftest = app.add_subcommand("selftest", "Run the acceptance battery");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return usage;
    }

    const OracleOptions oracle{threads};
    try {
        if (count->parsed()) {
            const auto p = detail::resolve_pattern(pattern_text);
            const auto pi = parse_permutation(perm_text);
            const auto c = count_occurrences(p, pi);
            if (json) {
                out << nlohmann::json{{"count", c}, {"pattern", p.to_string()}, {"perm", pi.to_string()}}.dump()
                    << '\n';
            } else {
                out << c << '\n';
            }
        } else if (occs->parsed()) {
            const auto p = detail::resolve_pattern(pattern_text);
            const auto pi = parse_permutation(perm_text);
            const auto found = find_occurrences(p, pi);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto &o : found) {
                    arr.push_back(o.positions);
                }
                out << nlohmann::json{{"occurrences", arr}, {"pattern", p.to_string()}, {"perm", pi.to_string()}}
                           .dump()
                    << '\n';
            } else {
                for (const auto &o : found) {
                    for (std::size_t i = 0; i < o.positions.size(); ++i) {
                        out << (i ? " " : "") << o.positions[i];
                    }
                    out << '\n';
                }
            }
        } else if (dist->parsed()) {
            const auto t = distribution_table(detail::resolve_pattern(pattern_text), max_n, oracle);
            out << (json ? t.to_json().dump() + "\n" : t.to_tsv());
        } else if (avoid->parsed()) {
            const auto a = avoidance_counts(detail::resolve_pattern(pattern_text), max_n, oracle);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto &v : a) {
                    arr.push_back(v.str());
                }
                out << nlohmann::json{{"avoiders", arr}}.dump() << '\n';
            } else {
                for (std::size_t n = 0; n < a.size(); ++n) {
                    out << n << '\t' << a[n].str() << '\n';
                }
            }
        } else if (formula->parsed()) {
            const auto req = make_request(family_text, detail::parse_inners(inner_texts), k);
            const auto ev = evaluate_family(req, order, oracle);
            if (json) {
                nlohmann::json j{{"family", request_label(req)}, {"inners", ev.inner_sources}};
                j["avoidance"] = ev.result.avoidance ? ev.result.avoidance->to_json() : nlohmann::json(nullptr);
                j["distribution"] =
                    ev.result.distribution ? ev.result.distribution->to_json() : nlohmann::json(nullptr);
                out << j.dump() << '\n';
            } else {
                out << "family\t" << request_label(req) << '\n';
                for (const auto &s : ev.inner_sources) {
                    out << "inner\t" << s << '\n';
                }
                if (ev.result.avoidance) {
                    out << "avoidance\n" << detail::series_tsv(*ev.result.avoidance);
                }
                if (ev.result.distribution) {
                    out << "distribution\n" << detail::series_tsv(*ev.result.distribution);
                }
            }
        } else if (build->parsed()) {
            const auto p = build_family_pattern(make_request(family_text, detail::parse_inners(inner_texts), k));
            out << (json ? p.to_json().dump() : p.to_string()) << '\n';
        } else if (verify->parsed()) {
            const auto reports =
                verify_family(make_request(family_text, detail::parse_inners(inner_texts), k), max_n, oracle);
            bool all = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &r : reports) {
                all = all && r.ok();
                if (json) {
                    arr.push_back(r.to_json());
                } else {
                    out << r.to_text();
                }
            }
            if (json) {
                out << arr.dump() << '\n';
            }
            return all ? ok : mismatch;
        } else if (catalog->parsed()) {
            if (!catalog_id.empty()) {
                const auto p = catalog_pattern(catalog_id);
                out << (json ? p.to_json().dump() : catalog_id + "\t" + p.to_string()) << '\n';
            } else if (json) {
                nlohmann::json j = nlohmann::json::object();
                for (const auto &[id, text] : catalog_entries) {
                    j[std::string(id)] = parse_mesh_pattern(text).to_json();
                }
                out << j.dump() << '\n';
            } else {
                for (const auto &[id, text] : catalog_entries) {
                    out << id << '\t' << parse_mesh_pattern(text).to_string() << '\n';
                }
            }
        } else if (selftest->parsed()) {
            bool all = true;
            for (const auto &c : run_battery(BatteryOptions{threads})) {
                all = all && c.passed;
                print_criterion(out, c);
            }
            return all ? ok : mismatch;
        }
    } catch (const parse_error &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const precondition_error &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const consistency_error &e) {
        err << "internal mismatch: " << e.what() << '\n';
        return mismatch;
    }
    return ok;
}

} // namespace meshpat::cli

#endif
