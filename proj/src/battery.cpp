#include "qtk/battery.hpp"

#include "qtk/error.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/oracle.hpp"
#include "qtk/stats.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <thread>

namespace qtk {

namespace {

CheckResult expect(std::string name, nlohmann::json params, bool ok, std::string detail)
{
    return {std::move(name), std::move(params), ok, std::move(detail)};
}

CheckResult expect_eq(std::string name, nlohmann::json params, const std::string& got, const std::string& want)
{
    const bool ok = got == want;
    return {std::move(name), std::move(params), ok, ok ? got : "got " + got + ", expected " + want};
}

// Runs body and turns an exception into a failed entry.
CheckResult guarded(const std::string& name, const nlohmann::json& params, const std::function<CheckResult()>& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, params, false, std::string("exception: ") + e.what()};
    }
}

std::vector<Partition> supported_shapes(int max_n, bool include_conjugates)
{
    std::vector<Partition> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : partitions_of(n)) {
            const auto s = classify_shape(mu);
            if (s && (include_conjugates || !s->conjugated)) out.push_back(mu);
        }
    return out;
}

Partition shape_of(std::vector<int> head, int twos, int ones)
{
    head.insert(head.end(), static_cast<std::size_t>(twos), 2);
    head.insert(head.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(head));
}

std::string optional_text(const std::optional<Partition>& p) { return p ? p->pretty() : "absent"; }

} // namespace

Report worked_examples()
{
    Report out;
    const auto none = nlohmann::json::object();
    auto P = [](const char* s) { return Tableau::parse(s); };
    const Word w = parse_word("73462235111248");
    out.push_back(expect_eq("example_charge", {{"word", "73462235111248"}}, std::to_string(charge(w)), "9"));
    {
        std::string got;
        for (const auto& sub : standard_subwords(w)) got += (got.empty() ? "" : " ") + word_to_string(sub);
        out.push_back(expect_eq("example_standard_subwords", {{"word", "73462235111248"}}, got, "73625148 4231 12"));
    }
    out.push_back(expect_eq("example_add_row_block", {{"m", 2}, {"rho", "11,3"}},
                            add_row_block(2, Partition{11, 3}, P("1,3,5,6/2,4")).to_string(), "1,2,4,6,7/3,5,8"));
    out.push_back(expect_eq("example_add_row_block", {{"m", 2}, {"rho", "8,3,1"}},
                            add_row_block(2, Partition{8, 3, 1}, P("1,2,3/4/5")).to_string(), "1,2,5,7/3,4/6"));
    out.push_back(expect_eq("example_add_col_block", {{"m", 2}, {"rho", "4,3,1,1,1,1,1,1,1"}},
                            add_col_block(2, Partition{4, 3, 1, 1, 1, 1, 1, 1, 1}, P("1,3,5,6/2,4")).to_string(),
                            "1,3,5,7/2,4,6/8"));
    out.push_back(expect_eq("example_unbuild", {{"T", "1,4,5/2,6/3"}}, unbuild(2, P("1,4,5/2,6/3")).to_string(),
                            "1,3/2/4"));
    out.push_back(expect_eq("example_unbuild", {{"T", "1,3/2/4"}}, unbuild(2, P("1,3/2/4")).to_string(), "1,2"));
    out.push_back(expect_eq("example_type", {{"T", "1,4,5/2,6/3"}}, type_two_col(P("1,4,5/2,6/3"), 3).to_string(),
                            "V,V,H"));
    {
        const Tableau T = P("1,2,3/4/5");
        const Partition rho{8, 3, 1};
        out.push_back(
            expect_eq("example_pair_class", {{"T", T.to_string()}}, to_string(classify_pair(5, 2, T, rho)), "unstable"));
        const auto [hat, partner] = pair_involution(5, 2, T, rho);
        out.push_back(expect_eq("example_pair_involution", {{"T", T.to_string()}},
                                hat.to_string() + " " + partner.pretty(), "1,2,3,5/4 (7,4,1)"));
        out.push_back(expect_eq("example_pair_types", {{"T", T.to_string()}},
                                type_two_col(T, 2).to_string() + " " + type_two_col(hat, 2).to_string(),
                                "H,H,S H,H,S"));
    }
    const Partition lam{5, 4, 2, 2, 1};
    out.push_back(expect_eq("example_snake_removal", {{"k", 4}}, optional_text(drop_snake(lam, 4)), "(3,2,2,2,1)"));
    out.push_back(expect_eq("example_snake_removal", {{"k", 5}}, optional_text(drop_snake(lam, 5)), "absent"));
    out.push_back(expect_eq("example_snake_removal", {{"k", 10}},
                            optional_text(drop_snake(Partition{12, 5, 5}, 10)) + " height " +
                                std::to_string(snake_height(Partition{12, 5, 5}, 10)),
                            "(4,4,4) height 3"));
    out.push_back(expect_eq("example_snake_involution", none,
                            snake_involution(Partition{5, 5, 2}, 10, Partition{12, 5, 5}).pretty(), "(13,5,4)"));
    return out;
}

Report main_theorem_checks(int max_n)
{
    Report out;
    for (const auto& mu : supported_shapes(max_n, true)) {
        const nlohmann::json params = {{"mu", mu.to_string()}};
        out.push_back(guarded("stat_genfun_equals_macdonald", params, [&] {
            const auto H = macdonald(mu);
            const bool ok = stat_genfun(mu) == H;
            return expect("stat_genfun_equals_macdonald", params, ok,
                          ok ? std::to_string(H.terms().size()) + " Schur coefficients agree" : "expansions differ");
        }));
        out.push_back(guarded("kostka_schur_positive", params, [&] {
            const auto H = macdonald(mu);
            for (const auto& [lambda, c] : H.terms())
                if (!is_nonnegative(c))
                    return expect("kostka_schur_positive", params, false, "negative term in K" + lambda.pretty());
            return expect("kostka_schur_positive", params, true, "all coefficients nonnegative");
        }));
    }
    return out;
}

Report component_checks(int max_n)
{
    Report out;
    for (int m = 3; m <= 4; ++m)
        for (int a = 0; 2 * a + m <= max_n; ++a)
            for (int b = 0; 2 * a + b + m <= max_n; ++b) {
                const Partition mu = shape_of({m}, a, b);
                const auto shape = require_supported(mu);
                const auto base = macdonald(shape_of({}, a, b));
                for (const auto& g : head_groups(m)) {
                    std::string heads;
                    for (const auto& S : g.heads) heads += (heads.empty() ? "" : " ") + S.to_string();
                    const nlohmann::json params = {{"a", a}, {"b", b}, {"heads", heads}};
                    out.push_back(guarded("component_generating_function", params, [&] {
                        const bool ok = stat_component(shape, g) == g.op(base);
                        return expect("component_generating_function", params, ok,
                                      ok ? "equals " + g.formula + " applied to H_(2^a 1^b)"
                                         : "differs from " + g.formula);
                    }));
                }
            }
    return out;
}

Report specialization_checks(int max_n)
{
    Report out;
    for (const auto& mu : supported_shapes(max_n, true)) {
        const nlohmann::json params = {{"mu", mu.to_string()}};
        const int n = mu.size();
        const auto H = macdonald(mu);
        const int nq = n_stat(conjugate(mu)), nt = n_stat(mu);
        auto fail_first = [&](const std::string& name, const std::function<std::string(const Partition&)>& why) {
            for (const auto& lambda : partitions_of(n)) {
                auto w = why(lambda);
                if (!w.empty()) return expect(name, params, false, "s" + lambda.pretty() + ": " + w);
            }
            return expect(name, params, true, "all " + std::to_string(partitions_of(n).size()) + " coefficients");
        };
        out.push_back(guarded("specialization_q0_kostka_foulkes", params, [&] {
            return fail_first("specialization_q0_kostka_foulkes", [&](const Partition& lambda) {
                return at_q_zero(H.coeff(lambda)) == kostka_foulkes(lambda, mu) ? std::string{} : "differs";
            });
        }));
        out.push_back(guarded("specialization_q1_t1_syt_count", params, [&] {
            return fail_first("specialization_q1_t1_syt_count", [&](const Partition& lambda) {
                return H.coeff(lambda).eval(1, 1) == QTRational(count_syt(lambda)) ? std::string{} : "differs";
            });
        }));
        out.push_back(expect("specialization_column_coefficient", params,
                             H.coeff(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == QTPoly::q(nq),
                             "coefficient of s_(1^n) is q^" + std::to_string(nq)));
        out.push_back(expect("specialization_row_coefficient", params, H.coeff(Partition{n}) == QTPoly::t(nt),
                             "coefficient of s_(n) is t^" + std::to_string(nt)));
        out.push_back(guarded("duality_reverse_conjugate", params, [&] {
            return fail_first("duality_reverse_conjugate", [&](const Partition& lambda) {
                return H.coeff(lambda) == reverse(H.coeff(conjugate(lambda)), nq, nt) ? std::string{} : "differs";
            });
        }));
    }
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const nlohmann::json params = {{"lambda", lambda.to_string()}};
            const auto h = count_syt_hook(lambda), e = count_syt_enumerated(lambda);
            out.push_back(expect("syt_count_hook_equals_enumeration", params, h == e,
                                 "hook " + h.get_str() + ", enumerated " + e.get_str()));
        }
    return out;
}

Report oracle_checks(int oracle_degree, int points, std::uint64_t seed)
{
    Report out;
    const auto pts = draw_points(seed, points, 16);
    for (const auto& mu : supported_shapes(oracle_degree, true)) {
        const auto H = macdonald(mu);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const nlohmann::json params = {{"mu", mu.to_string()}, {"point", i}};
            out.push_back(guarded("oracle_equivalence", params, [&] {
                const auto oracle = macdonald_oracle(mu, pts[i]);
                const bool ok = oracle == evaluate(H, pts[i]);
                const std::string at = "(q,t)=(" + pts[i].q.get_str() + "," + pts[i].t.get_str() + ")";
                return expect("oracle_equivalence", params, ok, (ok ? "exact agreement at " : "disagreement at ") + at);
            }));
        }
    }
    // A second linear extension of dominance: by n(lambda) descending, ties in reverse. Dominance
    // is a total order below size 6, so 6 is the first size with a genuine choice.
    if (!pts.empty())
        for (int n = 6; n <= oracle_degree; ++n) {
            auto order = partitions_of(n);
            std::stable_sort(order.begin(), order.end(),
                             [](const Partition& x, const Partition& y) { return n_stat(x) > n_stat(y); });
            const nlohmann::json params = {{"n", n}};
            out.push_back(guarded("gram_schmidt_order_independence", params, [&] {
                const auto standard = linear_extension(n);
                if (order == standard) return expect("gram_schmidt_order_independence", params, false, "orders coincide");
                for (const auto& mu : partitions_of(n))
                    if (!(macdonald_oracle_J(mu, pts[0], order) == macdonald_oracle_J(mu, pts[0], standard)))
                        return expect("gram_schmidt_order_independence", params, false, "J" + mu.pretty() + " differs");
                return expect("gram_schmidt_order_independence", params, true, "two dominance extensions agree");
            }));
        }
    return out;
}

Report rational_prop_checks(int max_n, int points, std::uint64_t seed)
{
    Report out;
    const auto pts = draw_points(seed, points, 16);
    for (int a = 0; 2 * a + 3 <= max_n; ++a)
        for (int b = 0; 2 * a + b + 3 <= max_n; ++b) {
            try {
                for (auto& r : verify_rational_props(a, b, pts)) out.push_back(std::move(r));
            } catch (const std::exception& e) {
                out.push_back({"rational_props", {{"a", a}, {"b", b}}, false, std::string("exception: ") + e.what()});
            }
        }
    return out;
}

namespace {

struct LemmaTally {
    explicit LemmaTally(std::string n) : name(std::move(n)) {}
    std::string name;
    long cases = 0;
    std::string failure;
    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++cases;
        if (!ok && failure.empty()) failure = describe();
    }
    CheckResult result(nlohmann::json params) const
    {
        return {name, std::move(params), failure.empty(),
                failure.empty() ? std::to_string(cases) + " cases" : failure};
    }
};

std::string pair_text(const Tableau& T, const Partition& rho) { return "T=" + T.to_string() + " rho=" + rho.pretty(); }

} // namespace

Report structural_checks(int max_n)
{
    Report out;
    const int top = std::min(5, max_n);
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= top; ++n) {
            LemmaTally round_row{"block_round_trip_row"}, round_col{"block_round_trip_column"},
                transpose_sym{"block_transpose_symmetry"}, mtype{"unbuild_preserves_type"},
                mtype_col{"unbuild_preserves_type_column"}, charge_l{"built_charge_formula"},
                tfae{"stability_conditions_agree"}, height{"stable_pairs_have_height_one"},
                invol{"pair_involution"};
            const int binom = m * (m - 1) / 2;
            for (const auto& T : enumerate_syt(n)) {
                const Partition lambda = T.shape();
                for (const auto& rho : strip_extensions(lambda, n + m, Strip::horizontal)) {
                    const Tableau built = add_row_block(m, rho, T);
                    round_row.check(remove_row_block(m, rho, built) == T, [&] { return pair_text(T, rho); });
                    const Tableau back = unbuild(m, built);
                    bool same_type = true;
                    for (int a = 0; 2 * a <= n; ++a) same_type = same_type && type_two_col(back, a) == type_two_col(T, a);
                    mtype.check(same_type, [&] { return pair_text(T, rho); });
                    const int strip = lambda.size() - remove_first_row(rho).size();
                    charge_l.check(charge(built) == charge(T) + strip + binom + (m - 1) * n,
                                   [&] { return pair_text(T, rho); });
                    const auto core = drop_snake(rho, n);
                    if (!core) continue;
                    const bool stable = back == T;
                    tfae.check(stable == (built.shape() == *core), [&] { return pair_text(T, rho); });
                    if (stable) {
                        height.check(snake_height(rho, n) == 1, [&] { return pair_text(T, rho); });
                        continue;
                    }
                    invol.check(
                        [&] {
                            const auto [hat, partner] = pair_involution(n, m, T, rho);
                            if (!(add_row_block(m, partner, hat) == built)) return false;
                            if (classify_pair(n, m, hat, partner) != PairClass::unstable) return false;
                            if (pair_involution(n, m, hat, partner) != std::pair{T, rho}) return false;
                            if (std::abs(snake_height(partner, n) - snake_height(rho, n)) != 1) return false;
                            const int strip_hat = hat.size() - remove_first_row(partner).size();
                            for (int a = 0; 2 * a <= n; ++a) {
                                if (!(type_two_col(hat, a) == type_two_col(T, a))) return false;
                                const SupportedShape two{ShapeFamily::two_column, a, n - 2 * a, false};
                                if (stat_pair(two, T).a + strip != stat_pair(two, hat).a + strip_hat) return false;
                            }
                            return true;
                        }(),
                        [&] { return pair_text(T, rho); });
                }
                for (const auto& rho : strip_extensions(lambda, n + m, Strip::vertical)) {
                    const Tableau built = add_col_block(m, rho, T);
                    round_col.check(remove_col_block(m, rho, built) == T, [&] { return pair_text(T, rho); });
                    transpose_sym.check(built == transpose(add_row_block(m, conjugate(rho), transpose(T))),
                                        [&] { return pair_text(T, rho); });
                    const Tableau back = unbuild(m, built);
                    bool same_type = true;
                    for (int a = 0; 2 * a <= n; ++a) same_type = same_type && type_two_col(back, a) == type_two_col(T, a);
                    mtype_col.check(same_type, [&] { return pair_text(T, rho); });
                }
            }
            const nlohmann::json params = {{"m", m}, {"n", n}};
            for (const auto* t : {&round_row, &round_col, &transpose_sym, &mtype, &mtype_col, &charge_l, &tfae, &height,
                                  &invol})
                out.push_back(t->result(params));
        }
    return out;
}

namespace {

struct PrintedSequence {
    Partition mu;
    const char* type;
    std::vector<long> counts;
};

const std::vector<PrintedSequence>& printed_sequences()
{
    static const std::vector<PrintedSequence> table = {
        {{3, 1, 1, 1}, "(1,2,3)|S,S,S", {1, 2, 3, 4, 2, 1, 1}},
        {{3, 1, 1, 1}, "(1,3/2)|S,S,S", {2, 4, 6, 5, 4, 2, 1}},
        {{3, 1, 1, 1}, "(1,2/3)|S,S,S", {1, 2, 4, 5, 6, 4, 2}},
        {{3, 1, 1, 1}, "(1/2/3)|S,S,S", {1, 1, 2, 4, 3, 2, 1}},
        {{4, 1, 1}, "(1,2,3,4)|S,S", {1, 2, 1, 1}},
        {{4, 1, 1}, "(1,3,4/2)|S,S", {2, 4, 2, 1}},
        {{4, 1, 1}, "(1,2,4/3)|S,S", {2, 4, 2, 1}},
        {{4, 1, 1}, "(1,2,3/4)|S,S", {1, 2, 3, 3}},
        {{4, 1, 1}, "(1,2/3,4)|S,S", {1, 2, 2, 1}},
        {{4, 1, 1}, "(1,3/2,4)|S,S", {1, 2, 2, 1}},
        {{4, 1, 1}, "(1,4/2/3)|S,S", {3, 3, 2, 1}},
        {{4, 1, 1}, "(1,3/2/4)|S,S", {1, 2, 4, 2}},
        {{4, 1, 1}, "(1,2/3/4)|S,S", {1, 2, 4, 2}},
        {{4, 1, 1}, "(1/2/3/4)|S,S", {1, 1, 2, 1}},
        {{3, 2, 2, 1}, "(1,2,3)|H,H,S", {1, 4, 6, 8, 7, 6, 4, 2, 1, 1}},
        {{3, 2, 2, 1}, "(1,3/2)|H,H,S", {2, 3, 8, 12, 13, 10, 8, 4, 2, 1}},
        {{3, 2, 2, 1}, "(1,2/3)|H,H,S", {0, 0, 2, 7, 12, 14, 13, 9, 4, 2}},
        {{3, 2, 2, 1}, "(1/2/3)|H,H,S", {0, 0, 1, 3, 5, 7, 7, 4, 2, 1}},
    };
    return table;
}

std::string seq_text(const std::vector<long>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace

Report unimodality_checks(int max_n)
{
    Report out;
    for (const auto& ps : printed_sequences()) {
        if (ps.mu.size() > max_n) continue;
        const nlohmann::json params = {{"mu", ps.mu.to_string()}, {"type", ps.type}};
        out.push_back(guarded("printed_type_sequence", params, [&] {
            for (const auto& cls : unimodal_profile(require_supported(ps.mu)))
                if (cls.type.to_string() == ps.type)
                    return expect_eq("printed_type_sequence", params, seq_text(cls.counts), seq_text(ps.counts));
            return expect("printed_type_sequence", params, false, "type class not found");
        }));
    }
    for (const auto& mu : supported_shapes(max_n, false)) {
        const nlohmann::json params = {{"mu", mu.to_string()}};
        out.push_back(guarded("type_class_unimodality", params, [&] {
            const auto classes = unimodal_profile(require_supported(mu));
            for (const auto& cls : classes)
                if (!cls.unimodal)
                    return expect("type_class_unimodality", params, false,
                                  "not unimodal: " + cls.type.to_string() + " " + seq_text(cls.counts));
            return expect("type_class_unimodality", params, true,
                          std::to_string(classes.size()) + " classes, all unimodal");
        }));
    }
    return out;
}

Report run_battery(const BatteryOptions& opts)
{
    if (opts.max_n > 8) throw DomainError("max-n must satisfy max-n ≤ 8");
    if (opts.oracle_degree > 6) throw DomainError("oracle-degree must satisfy oracle-degree ≤ 6");
    if (opts.points < 0) throw DomainError("points must be nonnegative");
    if (opts.jobs < 1) throw DomainError("jobs must be at least 1");

    std::vector<std::function<Report()>> tasks;
    if (opts.max_n >= 1) {
        tasks.emplace_back([] { return worked_examples(); });
        tasks.emplace_back([&] { return main_theorem_checks(opts.max_n); });
        tasks.emplace_back([&] { return component_checks(opts.max_n); });
        tasks.emplace_back([&] { return specialization_checks(opts.max_n); });
        tasks.emplace_back([&] { return hl_identity_suite(opts.max_n); });
        tasks.emplace_back([&] { return structural_checks(opts.max_n); });
        tasks.emplace_back([&] { return unimodality_checks(opts.max_n); });
    }
    if (opts.max_n >= 3 && opts.points >= 1)
        tasks.emplace_back([&] { return rational_prop_checks(opts.max_n, opts.points, opts.seed); });
    if (opts.oracle_degree >= 1 && opts.points >= 1)
        tasks.emplace_back([&] { return oracle_checks(opts.oracle_degree, opts.points, opts.seed); });

    std::vector<Report> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                results[i] = {{"battery_task", {{"index", i}}, false, std::string("exception: ") + e.what()}};
            }
        }
    };
    const int workers = std::min<int>(opts.jobs, static_cast<int>(tasks.size()));
    std::vector<std::future<void>> running;
    for (int w = 1; w < workers; ++w) running.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : running) f.get();

    Report out;
    for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    sort_report(out);
    return out;
}

} // namespace qtk
