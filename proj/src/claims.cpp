#include "qpd/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <tuple>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qpd/counters.hpp"
#include "qpd/qfactory.hpp"

namespace qpd {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(trim(s.substr(start)));
            return out;
        }
        out.push_back(trim(s.substr(start, p - start)));
        start = p + 1;
    }
}

[[noreturn]] void line_error(const std::string& name, std::size_t line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

// --- integer expressions over named parameters ------------------------------

class IntExprParser {
  public:
    IntExprParser(const std::string& text,
                  const std::vector<std::pair<std::string, std::int64_t>>& vars)
        : text_(text), vars_(vars) {}

    std::int64_t run() {
        std::int64_t v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("integer expression '" + text_ + "': " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int64_t expr() {
        std::int64_t v = term();
        while (true) {
            if (consume('+')) v += term();
            else if (consume('-')) v -= term();
            else return v;
        }
    }

    std::int64_t term() {
        std::int64_t v = factor();
        while (consume('*')) v *= factor();
        return v;
    }

    std::int64_t factor() {
        std::int64_t base = primary();
        if (!consume('^')) return base;
        std::int64_t e = primary();
        if (e < 0) fail("negative exponent");
        std::int64_t v = 1;
        for (std::int64_t i = 0; i < e; ++i) {
            if (std::abs(v) > (std::int64_t(1) << 40)) fail("value too large");
            v *= base;
        }
        return v;
    }

    std::int64_t primary() {
        skip_ws();
        if (consume('(')) {
            std::int64_t v = expr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (consume('-')) return -primary();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::int64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > (std::int64_t(1) << 40)) fail("integer too large");
                ++pos_;
            }
            return v;
        }
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                    text_[pos_] == '_')) {
            std::string name;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_')) {
                name += text_[pos_++];
            }
            for (const auto& [k, v] : vars_)
                if (k == name) return v;
            fail("unknown parameter '" + name + "'");
        }
        fail("expected integer, parameter, or '('");
    }

    const std::string& text_;
    const std::vector<std::pair<std::string, std::int64_t>>& vars_;
    std::size_t pos_ = 0;
};

// Known predicate targets and their arity.
int match_arity(const std::string& name) {
    if (name == "count_a" || name == "count_a_star" || name == "count_e" ||
        name == "count_e_star")
        return 1;
    if (name == "count_r" || name == "count_c" || name == "count_d" || name == "odd_mult")
        return 0;
    return -1;
}

bool known_closed_form(const std::string& name) {
    return name == "square_not3" || name == "pd4_closed_form";
}

// Residues of the predicate's expected values over indices 0..index_max.
std::vector<std::uint64_t> predicate_table(const ClaimInstance& inst, std::int64_t index_max) {
    namespace ct = counters;
    const std::uint64_t m = inst.modulus;
    auto from_longs = [&](const std::vector<std::int64_t>& v) {
        std::vector<std::uint64_t> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = static_cast<std::uint64_t>(v[i]) % m;
        return out;
    };
    auto from_integers = [&](const std::vector<Integer>& v) {
        std::vector<std::uint64_t> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), m);
        return out;
    };

    const std::string& f = inst.predicate_name;
    if (inst.predicate == PredicateKind::ClosedForm) {
        std::vector<std::uint64_t> out(static_cast<std::size_t>(index_max) + 1);
        for (std::int64_t n = 0; n <= index_max; ++n) {
            const int v = f == "square_not3" ? ct::square_not3(n) : ct::pd4_closed_form(n);
            out[static_cast<std::size_t>(n)] = static_cast<std::uint64_t>(v) % m;
        }
        return out;
    }

    const int l = inst.predicate_arg_values.empty()
                      ? 0
                      : static_cast<int>(inst.predicate_arg_values[0]);
    if (f == "count_a") return from_longs(ct::count_a_range(index_max, l));
    if (f == "count_a_star") return from_longs(ct::count_a_star_range(index_max, l));
    if (f == "count_r") return from_longs(ct::count_r_range(index_max));
    if (f == "count_d") return from_longs(ct::count_d_range(index_max));
    if (f == "count_e") return from_longs(ct::count_e_range(index_max, l));
    if (f == "count_e_star") return from_longs(ct::count_e_star_range(index_max, l));
    if (f == "count_c") return from_integers(ct::count_c_range(index_max));
    if (f == "odd_mult") return from_integers(ct::odd_multiplicity_range(index_max));
    throw std::runtime_error(inst.claim_id + ": unknown predicate target '" + f + "'");
}

}  // namespace

std::int64_t eval_int_expr(const std::string& text,
                           const std::vector<std::pair<std::string, std::int64_t>>& vars) {
    return IntExprParser(text, vars).run();
}

std::vector<ClaimRow> parse_registry(std::istream& in, const std::string& name) {
    std::vector<ClaimRow> out;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    const std::vector<std::pair<std::string, std::int64_t>> no_vars;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;

        const std::vector<std::string> fields = split(t, '|');
        if (fields.size() != 10)
            line_error(name, lineno,
                       "expected 10 '|'-separated fields, got " + std::to_string(fields.size()));

        ClaimRow row;
        row.id = fields[0];
        if (row.id.empty()) line_error(name, lineno, "empty id");
        if (!seen.insert(row.id).second) line_error(name, lineno, "duplicate id '" + row.id + "'");

        row.k_text = fields[1];
        row.A_text = fields[2];
        row.r_texts = split(fields[3], ',');
        if (row.r_texts.empty() || row.r_texts[0].empty())
            line_error(name, lineno, "empty residue list");

        try {
            std::size_t used = 0;
            const unsigned long long m = std::stoull(fields[4], &used);
            if (used != fields[4].size() || m < 2 || m >= (1ULL << 32))
                throw std::invalid_argument("range");
            row.modulus = m;
        } catch (const std::exception&) {
            line_error(name, lineno, "bad modulus '" + fields[4] + "'");
        }

        const std::string& pred = fields[5];
        if (pred == "zero") {
            row.predicate = PredicateKind::Zero;
        } else if (pred.rfind("match:", 0) == 0 || pred.rfind("closed_form:", 0) == 0) {
            const bool is_match = pred.rfind("match:", 0) == 0;
            row.predicate = is_match ? PredicateKind::Match : PredicateKind::ClosedForm;
            std::string rest = pred.substr(pred.find(':') + 1);
            const std::size_t paren = rest.find('(');
            if (paren != std::string::npos) {
                if (rest.back() != ')') line_error(name, lineno, "unterminated predicate arguments");
                row.predicate_args = split(rest.substr(paren + 1, rest.size() - paren - 2), ',');
                rest = rest.substr(0, paren);
            }
            row.predicate_name = trim(rest);
            if (is_match) {
                const int arity = match_arity(row.predicate_name);
                if (arity < 0)
                    line_error(name, lineno, "unknown counter '" + row.predicate_name + "'");
                if (static_cast<int>(row.predicate_args.size()) != arity)
                    line_error(name, lineno, "counter '" + row.predicate_name + "' takes " +
                                                 std::to_string(arity) + " argument(s)");
            } else {
                if (!known_closed_form(row.predicate_name))
                    line_error(name, lineno, "unknown closed form '" + row.predicate_name + "'");
                if (!row.predicate_args.empty())
                    line_error(name, lineno, "closed forms take no arguments");
            }
        } else {
            line_error(name, lineno, "bad predicate '" + pred + "'");
        }

        if (fields[6] != "-") {
            for (const std::string& cond : split(fields[6], ';')) {
                const std::size_t ge = cond.find(">=");
                const std::size_t pc = cond.find('%');
                try {
                    if (pc != std::string::npos && trim(cond.substr(0, pc)) == "n") {
                        const std::string rest = cond.substr(pc + 1);
                        const std::size_t ne = rest.find("!=");
                        if (ne == std::string::npos || trim(rest.substr(ne + 2)) != "0")
                            throw std::runtime_error("unrecognized condition");
                        const std::int64_t d = eval_int_expr(rest.substr(0, ne), no_vars);
                        if (d < 2) throw std::runtime_error("divisor must be >= 2");
                        row.not_divisible.push_back(d);
                    } else if (ge != std::string::npos && trim(cond.substr(0, ge)) == "n") {
                        row.min_index =
                            std::max(row.min_index, eval_int_expr(cond.substr(ge + 2), no_vars));
                    } else {
                        throw std::runtime_error("unrecognized condition");
                    }
                } catch (const std::exception& e) {
                    line_error(name, lineno, "bad condition '" + cond + "': " + e.what());
                }
            }
        }

        if (fields[7] != "-") {
            for (const std::string& p : split(fields[7], ';')) {
                const std::size_t eq = p.find('=');
                if (eq == std::string::npos)
                    line_error(name, lineno, "bad parameter spec '" + p + "'");
                const std::string pname = trim(p.substr(0, eq));
                const std::string spec = trim(p.substr(eq + 1));
                if (pname.empty() || spec.empty())
                    line_error(name, lineno, "bad parameter spec '" + p + "'");
                row.params.emplace_back(pname, spec);
            }
        }

        if (fields[8] == "proven") row.conjectural = false;
        else if (fields[8] == "conjectural") row.conjectural = true;
        else line_error(name, lineno, "bad status '" + fields[8] + "' (proven|conjectural)");

        row.source = fields[9];
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<ClaimRow> load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry file: " + path);
    return parse_registry(in, path);
}

namespace {

std::vector<std::int64_t> param_values(
    const std::string& spec, const std::vector<std::pair<std::string, std::int64_t>>& env) {
    auto inner = [&](const std::string& call) {
        // call looks like "name(EXPR)"
        const std::size_t open = call.find('(');
        return eval_int_expr(call.substr(open + 1, call.size() - open - 2), env);
    };
    std::vector<std::int64_t> vals;
    if (spec.rfind("nonres(", 0) == 0 && spec.back() == ')') {
        const std::int64_t M = inner(spec);
        if (M < 1) throw std::runtime_error("nonres: modulus must be >= 1");
        const auto residues = counters::quadratic_residues(static_cast<std::uint64_t>(M));
        for (std::int64_t s = 0; s < M; ++s)
            if (!residues.count(static_cast<std::uint64_t>(s))) vals.push_back(s);
        return vals;
    }
    if (spec.rfind("nonform(", 0) == 0 && spec.back() == ')') {
        const std::int64_t M = inner(spec);
        if (M < 1) throw std::runtime_error("nonform: bound must be >= 1");
        for (std::int64_t s = 1; s < M; ++s)
            if (!counters::is_pow4_times_8k1(static_cast<std::uint64_t>(s))) vals.push_back(s);
        return vals;
    }
    const std::size_t dots = spec.find("..");
    if (dots != std::string::npos) {
        const std::int64_t lo = eval_int_expr(spec.substr(0, dots), env);
        const std::int64_t hi = eval_int_expr(spec.substr(dots + 2), env);
        for (std::int64_t v = lo; v <= hi; ++v) vals.push_back(v);
        return vals;
    }
    for (const std::string& part : split(spec, ','))
        vals.push_back(eval_int_expr(part, env));
    return vals;
}

void expand_rec(const ClaimRow& row, std::size_t param_idx,
                std::vector<std::pair<std::string, std::int64_t>>& env,
                std::vector<ClaimInstance>& out) {
    if (param_idx < row.params.size()) {
        const auto& [pname, spec] = row.params[param_idx];
        for (std::int64_t v : param_values(spec, env)) {
            env.emplace_back(pname, v);
            expand_rec(row, param_idx + 1, env, out);
            env.pop_back();
        }
        return;
    }

    std::string label;
    for (const auto& [pname, v] : env) {
        if (!label.empty()) label += ',';
        label += pname + "=" + std::to_string(v);
    }

    const std::int64_t k = eval_int_expr(row.k_text, env);
    if (k != 0 && k < 2)
        throw std::runtime_error(row.id + ": k must be 0 (unrestricted) or >= 2, got " +
                                 std::to_string(k));
    const std::int64_t A = eval_int_expr(row.A_text, env);
    if (A < 1) throw std::runtime_error(row.id + ": progression step must be >= 1");

    std::vector<std::int64_t> arg_values;
    for (const std::string& a : row.predicate_args) arg_values.push_back(eval_int_expr(a, env));

    for (const std::string& r_text : row.r_texts) {
        const std::int64_t r = eval_int_expr(r_text, env);
        if (r < 0 || r >= A)
            throw std::runtime_error(row.id + ": residue " + std::to_string(r) +
                                     " outside [0, " + std::to_string(A) + ")");
        ClaimInstance inst;
        inst.claim_id = row.id;
        inst.param_label = label;
        inst.k = k;
        inst.A = A;
        inst.r = r;
        inst.modulus = row.modulus;
        inst.predicate = row.predicate;
        inst.predicate_name = row.predicate_name;
        inst.predicate_arg_values = arg_values;
        inst.min_index = row.min_index;
        inst.not_divisible = row.not_divisible;
        inst.conjectural = row.conjectural;
        out.push_back(std::move(inst));
    }
}

}  // namespace

std::vector<ClaimInstance> expand_claim(const ClaimRow& row) {
    std::vector<ClaimInstance> out;
    std::vector<std::pair<std::string, std::int64_t>> env;
    expand_rec(row, 0, env, out);
    return out;
}

std::vector<ClaimInstance> expand_all(const std::vector<ClaimRow>& rows) {
    std::vector<ClaimInstance> out;
    for (const auto& row : rows) {
        auto insts = expand_claim(row);
        out.insert(out.end(), insts.begin(), insts.end());
    }
    return out;
}

TruncatedSeries SeriesCache::get(std::int64_t k, OptMod modulus, std::int64_t precision) {
    const std::pair<std::int64_t, std::uint64_t> key{k, modulus.value_or(0)};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end() && it->second.precision() >= precision) return it->second;
    }
    TruncatedSeries s = k == 0 ? pd_series(precision, modulus) : pdk_series(k, precision, modulus);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end() || it->second.precision() < precision) {
        auto [pos, ok] = cache_.insert_or_assign(key, std::move(s));
        return pos->second;
    }
    return it->second;
}

VerificationReport verify_claim_with_series(const ClaimInstance& inst, std::int64_t index_max,
                                            const TruncatedSeries& series) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.claim_id = inst.claim_id;
    rep.param_label = inst.param_label;
    rep.k = inst.k;
    rep.A = inst.A;
    rep.r = inst.r;
    rep.modulus = inst.modulus;
    rep.conjectural = inst.conjectural;
    rep.index_max = index_max;
    rep.argument_max = index_max >= 0 ? inst.A * index_max + inst.r : 0;

    if (index_max >= 0) {
        if (!series.modular() || series.modulus() != inst.modulus)
            throw std::runtime_error(inst.claim_id + ": series lane does not match modulus " +
                                     std::to_string(inst.modulus));
        if (series.precision() < rep.argument_max)
            throw std::runtime_error(
                inst.claim_id + ": insufficient precision: need " +
                std::to_string(rep.argument_max) + ", have " +
                std::to_string(series.precision()));

        std::vector<std::uint64_t> expected;
        if (inst.predicate != PredicateKind::Zero) expected = predicate_table(inst, index_max);

        for (std::int64_t n = 0; n <= index_max; ++n) {
            if (n < inst.min_index) continue;
            bool excluded = false;
            for (std::int64_t d : inst.not_divisible)
                if (n % d == 0) excluded = true;
            if (excluded) continue;

            const std::uint64_t want =
                inst.predicate == PredicateKind::Zero
                    ? 0
                    : expected[static_cast<std::size_t>(n)];
            const std::uint64_t got = series.residue(inst.A * n + inst.r);
            ++rep.support;
            if (want != got) {
                ++rep.failure_count;
                if (static_cast<std::int64_t>(rep.failures.size()) <
                    VerificationReport::kMaxRecordedFailures) {
                    rep.failures.push_back({n, inst.A * n + inst.r, std::to_string(want),
                                            std::to_string(got)});
                }
            }
        }
    }

    rep.pass = rep.failure_count == 0;
    if (inst.conjectural) rep.verdict = rep.pass ? "consistent" : "refuted";
    else rep.verdict = rep.pass ? "verified" : "failed";
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport verify_claim(const ClaimInstance& inst, std::int64_t index_max,
                                SeriesCache& cache) {
    const std::int64_t needed = index_max >= 0 ? inst.A * index_max + inst.r : 0;
    const TruncatedSeries series = cache.get(inst.k, inst.modulus, needed);
    return verify_claim_with_series(inst, index_max, series);
}

namespace {

void run_pool(int jobs, std::size_t total, const std::function<void(std::size_t)>& work) {
    if (jobs < 1) jobs = 1;
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mu;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= total) return;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<VerificationReport> verify_claims(const std::vector<ClaimInstance>& insts,
                                              std::int64_t argument_max, int jobs,
                                              SeriesCache& cache) {
    std::vector<std::int64_t> index_max(insts.size());
    std::map<std::pair<std::int64_t, std::uint64_t>, std::int64_t> needed;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        const auto& inst = insts[i];
        index_max[i] = argument_max >= inst.r ? (argument_max - inst.r) / inst.A : -1;
        if (index_max[i] >= 0) {
            auto& p = needed[{inst.k, inst.modulus}];
            p = std::max(p, inst.A * index_max[i] + inst.r);
        }
    }

    // Warm the cache in parallel over the distinct series first; the walks
    // afterwards are cheap and reuse the cached series.
    std::vector<std::tuple<std::int64_t, std::uint64_t, std::int64_t>> keys;
    for (const auto& [key, prec] : needed) keys.emplace_back(key.first, key.second, prec);
    run_pool(jobs, keys.size(), [&](std::size_t i) {
        const auto& [k, m, prec] = keys[i];
        (void)cache.get(k, m, prec);
    });

    std::vector<VerificationReport> reports(insts.size());
    run_pool(jobs, insts.size(), [&](std::size_t i) {
        reports[i] = verify_claim(insts[i], index_max[i], cache);
    });
    return reports;
}

std::vector<std::uint8_t> recurrence_pdk_mod2(std::int64_t k, std::int64_t N) {
    if (k < 2) throw std::invalid_argument("recurrence_pdk_mod2: k must be >= 2");
    if (N < 0) throw std::invalid_argument("recurrence_pdk_mod2: N must be >= 0");

    // Right-hand side indicator: n = 0 or n = k m^2 with 3 not dividing m.
    std::vector<std::uint8_t> rhs(static_cast<std::size_t>(N) + 1, 0);
    rhs[0] = 1;
    for (std::int64_t m = 1; k * m * m <= N; ++m)
        if (m % 3 != 0) rhs[static_cast<std::size_t>(k * m * m)] = 1;

    std::vector<std::int64_t> squares;
    for (std::int64_t l = 1; l * l <= N; ++l)
        if (l % 3 != 0) squares.push_back(l * l);

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t n = 0; n <= N; ++n) {
        std::uint8_t b = rhs[static_cast<std::size_t>(n)];
        for (std::int64_t sq : squares) {
            if (sq > n) break;
            b ^= bits[static_cast<std::size_t>(n - sq)];
        }
        bits[static_cast<std::size_t>(n)] = b;
    }
    return bits;
}

std::vector<MinedCandidate> mine_congruences(std::int64_t k, std::uint64_t m, std::int64_t A_max,
                                             std::int64_t n_max, std::int64_t min_support,
                                             const std::vector<ClaimInstance>& known) {
    if (k < 2) throw std::invalid_argument("mine_congruences: k must be >= 2");
    if (m < 2) throw std::invalid_argument("mine_congruences: modulus must be >= 2");
    if (A_max < 2) throw std::invalid_argument("mine_congruences: A_max must be >= 2");
    if (n_max < 1) throw std::invalid_argument("mine_congruences: n_max must be >= 1");
    if (min_support < 10) throw std::invalid_argument("mine_congruences: min_support must be >= 10");

    const TruncatedSeries series = pdk_series(k, n_max, m);
    std::vector<char> zero(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t i = 0; i <= n_max; ++i)
        zero[static_cast<std::size_t>(i)] = series.residue(i) == 0;

    std::vector<MinedCandidate> out;
    for (std::int64_t A = 1; A <= A_max; ++A) {
        for (std::int64_t r = 0; r < A; ++r) {
            std::int64_t support = 0;
            bool ok = true;
            // PD_k(0) = 1, so the empty index n = 0 is excluded when r = 0.
            for (std::int64_t n = r == 0 ? 1 : 0; A * n + r <= n_max; ++n) {
                if (!zero[static_cast<std::size_t>(A * n + r)]) {
                    ok = false;
                    break;
                }
                ++support;
            }
            if (!ok || support < min_support) continue;

            MinedCandidate cand;
            cand.k = k;
            cand.m = m;
            cand.A = A;
            cand.r = r;
            cand.support = support;
            for (const auto& inst : known) {
                if (inst.k != k || inst.modulus != m ||
                    inst.predicate != PredicateKind::Zero)
                    continue;
                if (A % inst.A == 0 && r % inst.A == inst.r) {
                    cand.known = true;
                    cand.matched_id = inst.claim_id;
                    break;
                }
            }
            out.push_back(std::move(cand));
        }
    }
    return out;
}

std::vector<VerificationReport> check_conjectures(const std::vector<ClaimRow>& rows,
                                                  std::int64_t argument_max, int jobs,
                                                  SeriesCache& cache) {
    std::vector<ClaimRow> conjectural;
    for (const auto& row : rows)
        if (row.conjectural) conjectural.push_back(row);
    return verify_claims(expand_all(conjectural), argument_max, jobs, cache);
}

}  // namespace qpd
