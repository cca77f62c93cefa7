#include "patience/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "patience/enumeration.hpp"
#include "patience/errors.hpp"
#include "patience/geometry.hpp"
#include "patience/patience.hpp"
#include "patience/patterns.hpp"
#include "patience/series.hpp"
#include "patience/sweep.hpp"

namespace patience {

namespace {

using Pred = std::function<bool(const Permutation&)>;
using Counts = std::vector<std::uint64_t>;

std::string show(const Permutation& p) { return p.to_string(p.size() <= 9); }

std::string join(const Counts& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

PatternMatcher matcher(std::string_view text) { return PatternMatcher(parse_pattern(text)); }

bool avoid(const PatternMatcher& m, const Permutation& p) { return m.avoided_by(p.word()); }

std::optional<Permutation> first_violation(int n, const Pred& holds) {
    return sweep_symmetric_group(
        n, std::optional<Permutation>{},
        [&](std::optional<Permutation>& acc, const Permutation& p) {
            if (!acc && !holds(p)) acc = p;
        },
        [](std::optional<Permutation>& into, std::optional<Permutation>&& from) {
            if (!into) into = std::move(from);
        });
}

// `holds` must be true for every p in S_m, 1 <= m <= n.
PropertyResult for_all(std::string statement, int n, const Pred& holds) {
    for (int m = 1; m <= n; ++m) {
        if (auto w = first_violation(m, holds)) {
            return {std::move(statement), false, "n = " + std::to_string(m) + ": " + show(*w)};
        }
    }
    return {std::move(statement), true, "checked n = 1.." + std::to_string(n)};
}

std::uint64_t count(int n, const Pred& pred) { return count_symmetric_group(n, pred); }

// Count sequences left(m) and right(m) agree for 1 <= m <= n.
PropertyResult counts_agree(std::string statement, int n, const std::function<std::uint64_t(int)>& left,
                            const std::function<std::uint64_t(int)>& right) {
    Counts l;
    Counts r;
    for (int m = 1; m <= n; ++m) {
        l.push_back(left(m));
        r.push_back(right(m));
        if (l.back() != r.back()) {
            return {std::move(statement), false,
                    "n = " + std::to_string(m) + ": " + join(l) + " vs " + join(r)};
        }
    }
    return {std::move(statement), true, join(l)};
}

Permutation rpw_of(const Permutation& p) { return reverse_patience_word(patience_sort(p)); }

bool piles_at_successive_positions(const Permutation& p) {
    const Permutation where = inverse(p);
    const PileConfig r = patience_sort(p);
    for (const Pile& pile : r.piles()) {
        std::vector<int> pos;
        for (int v : pile) pos.push_back(where(v));
        const auto [lo, hi] = std::minmax_element(pos.begin(), pos.end());
        if (*hi - *lo + 1 != static_cast<int>(pos.size())) return false;
    }
    return true;
}

bool piles_hold_successive_values(const Permutation& p) {
    const PileConfig r = patience_sort(p);
    for (const Pile& pile : r.piles()) {
        if (pile.front() - pile.back() + 1 != static_cast<int>(pile.size())) return false;
    }
    return true;
}

bool bottom_row_increases(const PileConfig& r) {
    for (int i = 1; i < r.pile_count(); ++i) {
        if (r[static_cast<std::size_t>(i)].front() <= r[static_cast<std::size_t>(i - 1)].front()) return false;
    }
    return true;
}

// Two lines of one iterate meet in at least two points.
bool has_polygonal_crossing(const Permutation& p) {
    for (ShadowDiagram d = shadow_diagram(p); !d.empty(); d = iterate(d)) {
        const auto found = crossings(d);
        for (std::size_t i = 1; i < found.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (found[i].line_a == found[j].line_a && found[i].line_b == found[j].line_b) return true;
            }
        }
    }
    return false;
}

int max_pile(const PileConfig& r) {
    std::size_t best = 0;
    for (const Pile& pile : r.piles()) best = std::max(best, pile.size());
    return static_cast<int>(best);
}

GenPattern monotone(int length, bool increasing) {
    std::vector<int> letters;
    for (int i = 1; i <= length; ++i) letters.push_back(increasing ? i : length + 1 - i);
    return GenPattern(std::move(letters), std::vector<bool>(static_cast<std::size_t>(length), false));
}

std::string monotone_text(int length, bool increasing) {
    std::string s;
    for (int i = 1; i <= length; ++i) {
        if (i > 1) s += '-';
        s += std::to_string(increasing ? i : length + 1 - i);
    }
    return s;
}

int lis_length(const Permutation& p) {
    std::vector<int> best(static_cast<std::size_t>(p.size()), 1);
    int out = 0;
    for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < i; ++j) {
            if (p(j + 1) < p(i + 1)) best[static_cast<std::size_t>(i)] = std::max(best[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(j)] + 1);
        }
        out = std::max(out, best[static_cast<std::size_t>(i)]);
    }
    return out;
}

SuiteReport make(std::string_view suite, std::string header, int n) {
    SuiteReport r;
    r.suite = std::string(suite);
    r.header = std::move(header);
    r.n = n;
    return r;
}

void require_sweep_bound(int n) {
    if (n < 1) throw ParseError("--n must be positive");
    if (n > kVerifySweepBound) throw OracleBoundExceeded(n, kVerifySweepBound);
}

SuiteReport suite_thm22(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("thm2.2", "avoiding 3-!1-42: Bell-number count and equality with S_n(23-1)", n);
    const auto a = matcher("3-!1-42");
    const auto b = matcher("3-!1-4-2");
    const auto c = matcher("23-1");
    r.properties.push_back(counts_agree(
        "|S_n(3-!1-42)| = B_n", n, [&](int m) { return count(m, [&](const Permutation& p) { return avoid(a, p); }); },
        [](int m) { return static_cast<std::uint64_t>(bell(m)); }));
    r.properties.push_back(for_all("S_n(3-!1-42) = S_n(3-!1-4-2) = S_n(23-1)", n, [&](const Permutation& p) {
        const bool x = avoid(a, p);
        return x == avoid(b, p) && x == avoid(c, p);
    }));
    r.properties.push_back(for_all("p avoids 3-!1-42 iff RPW(R(p)) = p", n,
                                   [&](const Permutation& p) { return avoid(a, p) == (rpw_of(p) == p); }));
    PropertyResult growth{"B_2n > B_n^2 for 2 <= n <= 8", true, ""};
    for (int m = 2; m <= 8 && growth.passed; ++m) {
        if (bell(2 * m) <= bell(m) * bell(m)) growth = {growth.statement, false, "n = " + std::to_string(m)};
    }
    r.properties.push_back(std::move(growth));
    return r;
}

SuiteReport suite_cor24(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("cor2.4", "reverse, complement and inverse images of 3-!1-42", n);
    const auto p1 = matcher("31-!4-2");
    const auto p2 = matcher("3-1-!4-2");
    const auto p3 = matcher("3-12");
    const auto q1 = matcher("!2-41-3");
    const auto q2 = matcher("!2-4-1-3");
    const auto q3 = matcher("2-4-1-!3");
    const auto q4 = matcher("2-41-!3");
    const auto base = matcher("3-!1-42");
    const auto base_dashed = matcher("3-!1-4-2");
    r.properties.push_back(for_all("S_n(31-!4-2) = S_n(3-1-!4-2) = S_n(3-12)", n, [&](const Permutation& p) {
        const bool x = avoid(p1, p);
        return x == avoid(p2, p) && x == avoid(p3, p);
    }));
    r.properties.push_back(
        for_all("S_n(!2-41-3) = S_n(!2-4-1-3) = S_n(2-4-1-!3) = S_n(2-41-!3)", n, [&](const Permutation& p) {
            const bool x = avoid(q1, p);
            return x == avoid(q2, p) && x == avoid(q3, p) && x == avoid(q4, p);
        }));
    auto count_of = [&](const PatternMatcher& m) {
        return [mp = &m](int k) { return count(k, [mp](const Permutation& p) { return avoid(*mp, p); }); };
    };
    const auto bell_count = [](int m) { return static_cast<std::uint64_t>(bell(m)); };
    r.properties.push_back(counts_agree("|S_n(31-!4-2)| = B_n", n, count_of(p1), bell_count));
    r.properties.push_back(counts_agree("|S_n(!2-41-3)| = B_n", n, count_of(q1), bell_count));
    r.properties.push_back(counts_agree("|S_n(!2-4-1-3)| = B_n", n, count_of(q2), bell_count));
    r.properties.push_back(for_all("p avoids 3-!1-42 iff p^-1 avoids !2-41-3", n, [&](const Permutation& p) {
        return avoid(base, p) == avoid(q1, inverse(p));
    }));
    r.properties.push_back(for_all("p avoids 3-!1-4-2 iff p^-1 avoids !2-4-1-3", n, [&](const Permutation& p) {
        return avoid(base_dashed, p) == avoid(q2, inverse(p));
    }));
    return r;
}

struct PileTally {
    Counts few_piles;     // [k]: at most k piles
    Counts short_piles;   // [k]: every pile at most k cards
    Counts few_reversed;  // [k]: R(reverse p) has at most k piles
    Counts avoid_inc;     // [k]: avoids 1-2-...-(k+1)
    Counts avoid_dec;     // [k]: avoids (k+1)-...-2-1
};

PileTally tally_piles(int m) {
    std::vector<PatternMatcher> inc;
    std::vector<PatternMatcher> dec;
    for (int len = 1; len <= m + 1; ++len) {
        if (len <= m) {
            inc.emplace_back(monotone(len, true));
            dec.emplace_back(monotone(len, false));
        }
    }
    // Longest L in 1..m with p containing the monotone pattern of length L.
    auto longest = [&](const std::vector<PatternMatcher>& ms, const Permutation& p) {
        int len = 1;
        while (len < m && ms[static_cast<std::size_t>(len)].contained_in(p.word())) ++len;
        return len;
    };
    const std::size_t width = static_cast<std::size_t>(m) + 1;
    PileTally init{Counts(width), Counts(width), Counts(width), Counts(width), Counts(width)};
    return sweep_symmetric_group(
        m, init,
        [&](PileTally& t, const Permutation& p) {
            const PileConfig rp = patience_sort(p);
            const int piles = rp.pile_count();
            const int tallest = max_pile(rp);
            const int reversed = patience_sort(reverse(p)).pile_count();
            const int inc_len = longest(inc, p);
            const int dec_len = longest(dec, p);
            for (int k = 1; k <= m; ++k) {
                const auto i = static_cast<std::size_t>(k);
                t.few_piles[i] += piles <= k;
                t.short_piles[i] += tallest <= k;
                t.few_reversed[i] += reversed <= k;
                t.avoid_inc[i] += inc_len <= k;
                t.avoid_dec[i] += dec_len <= k;
            }
        },
        [](PileTally& into, PileTally&& from) {
            for (std::size_t i = 0; i < into.few_piles.size(); ++i) {
                into.few_piles[i] += from.few_piles[i];
                into.short_piles[i] += from.short_piles[i];
                into.few_reversed[i] += from.few_reversed[i];
                into.avoid_inc[i] += from.avoid_inc[i];
                into.avoid_dec[i] += from.avoid_dec[i];
            }
        });
}

SuiteReport suite_prop31(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("prop3.1", "monotone patterns versus the number and size of piles", n);
    r.properties.push_back(for_all("number of piles of R(p) = longest increasing subsequence", n,
                                   [](const Permutation& p) { return patience_sort(p).pile_count() == lis_length(p); }));
    PropertyResult few{"#{p : R(p) has <= k piles} = |S_n(1-2-...-(k+1))| for all k", true, ""};
    PropertyResult tall{"#{p : every pile of R(p) has <= k cards} = |S_n((k+1)-...-2-1)| for all k", true, ""};
    PropertyResult rev{"#{p : R(reverse p) has <= k piles} = |S_n((k+1)-...-2-1)| for all k", true, ""};
    for (int m = 1; m <= n; ++m) {
        const PileTally t = tally_piles(m);
        for (int k = 1; k <= m; ++k) {
            const auto i = static_cast<std::size_t>(k);
            const std::string where = "n = " + std::to_string(m) + ", k = " + std::to_string(k) + ": ";
            if (few.passed && t.few_piles[i] != t.avoid_inc[i]) {
                few.passed = false;
                few.detail = where + std::to_string(t.few_piles[i]) + " vs " + std::to_string(t.avoid_inc[i]);
            }
            if (rev.passed && t.few_reversed[i] != t.avoid_dec[i]) {
                rev.passed = false;
                rev.detail = where + std::to_string(t.few_reversed[i]) + " vs " + std::to_string(t.avoid_dec[i]);
            }
            if (tall.passed && t.short_piles[i] != t.avoid_dec[i]) {
                tall.passed = false;
                const PatternMatcher dec(monotone(k + 1, false));
                const auto w = first_violation(m, [&](const Permutation& p) {
                    return max_pile(patience_sort(p)) > k || avoid(dec, p);
                });
                tall.detail = where + std::to_string(t.short_piles[i]) + " vs " + std::to_string(t.avoid_dec[i]) +
                              (w ? "; " + show(*w) + " has piles of <= " + std::to_string(k) + " cards but contains " +
                                       monotone_text(k + 1, false)
                                 : std::string());
            }
        }
    }
    for (PropertyResult* p : {&few, &tall, &rev}) {
        if (p->passed) p->detail = "checked n = 1.." + std::to_string(n) + ", k = 1..n";
    }
    r.properties.push_back(std::move(few));
    r.properties.push_back(std::move(tall));
    r.properties.push_back(std::move(rev));
    return r;
}

SuiteReport suite_prop32(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("prop3.2", "reverse patience words and their inverses as avoidance classes", n);
    const auto a = matcher("3-!1-42");
    const auto b = matcher("!2-41-3");
    const auto b_dashed = matcher("!2-4-1-3");
    auto inverse_rpw = [](const Permutation& p) {
        const Permutation q = inverse(p);
        return rpw_of(q) == q;
    };
    r.properties.push_back(for_all("S_n(3-!1-42) = {RPW(R(s))}", n,
                                   [&](const Permutation& p) { return avoid(a, p) == (rpw_of(p) == p); }));
    r.properties.push_back(for_all("in S_n(3-!1-42) each pile of R(p) occupies successive positions", n,
                                   [&](const Permutation& p) { return !avoid(a, p) || piles_at_successive_positions(p); }));
    r.properties.push_back(for_all("S_n(!2-41-3) = {RPW(R(s))^-1}", n,
                                   [&](const Permutation& p) { return avoid(b, p) == inverse_rpw(p); }));
    r.properties.push_back(for_all("S_n(!2-41-3) = {p : each pile of R(p) holds successive values}", n,
                                   [&](const Permutation& p) { return avoid(b, p) == piles_hold_successive_values(p); }));
    r.properties.push_back(for_all("S_n(!2-4-1-3) = {RPW(R(s))^-1}", n,
                                   [&](const Permutation& p) { return avoid(b_dashed, p) == inverse_rpw(p); }));
    r.properties.push_back(
        for_all("S_n(!2-4-1-3) = {p : each pile of R(p) holds successive values}", n,
                [&](const Permutation& p) { return avoid(b_dashed, p) == piles_hold_successive_values(p); }));
    return r;
}

SuiteReport suite_cor34(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("cor3.4", "avoiding 3-!1-42 and !2-41-3 gives the layered permutations", n);
    const auto a = matcher("3-!1-42");
    const auto b = matcher("!2-41-3");
    const auto c = matcher("23-1");
    const auto d = matcher("31-2");
    r.properties.push_back(for_all("S_n(3-!1-42, !2-41-3) = layered permutations", n, [&](const Permutation& p) {
        return (avoid(a, p) && avoid(b, p)) == is_layered(p);
    }));
    r.properties.push_back(for_all("S_n(3-!1-42, !2-41-3) = S_n(23-1, 31-2)", n, [&](const Permutation& p) {
        return (avoid(a, p) && avoid(b, p)) == (avoid(c, p) && avoid(d, p));
    }));
    r.properties.push_back(counts_agree(
        "#layered permutations = 2^(n-1)", n, [](int m) { return count(m, [](const Permutation& p) { return is_layered(p); }); },
        [](int m) { return std::uint64_t{1} << (m - 1); }));
    return r;
}

SuiteReport suite_thm35(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("thm3.5", "S_n(3-!1-42, 31-!4-2) is the set of reverse patience words with crossing-free D(0)", n);
    const auto a = matcher("3-!1-42");
    const auto b = matcher("31-!4-2");
    auto in_class = [&](const Permutation& p) { return avoid(a, p) && avoid(b, p); };
    r.properties.push_back(for_all("p in S_n(3-!1-42, 31-!4-2) iff RPW(R(p)) = p and D(0) has no crossing", n,
                                   [&](const Permutation& p) {
                                       return in_class(p) == (rpw_of(p) == p && crossings(shadow_diagram(p)).empty());
                                   }));
    r.properties.push_back(for_all("for such p the bottom rows of R(p) and S(p) increase", n, [&](const Permutation& p) {
        if (!in_class(p)) return true;
        const StablePair pair = extended_patience_sort(p);
        return bottom_row_increases(pair.insertion) && bottom_row_increases(pair.recording);
    }));
    r.properties.push_back(for_all("for such p the piles of R(p) form a strongly monotone partition", n,
                                   [&](const Permutation& p) { return !in_class(p) || is_strongly_monotone(patience_sort(p)); }));
    return r;
}

SuiteReport suite_thm36(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("thm3.6", "every iterate crossing-free versus increasing rows of R and S", n);
    r.properties.push_back(for_all("every iterate of p is crossing-free iff every row of R(p) and S(p) increases", n,
                                   [](const Permutation& p) {
                                       return iterates_crossing_free(p) == rows_monotone(extended_patience_sort(p));
                                   }));
    r.properties.push_back(for_all("every iterate crossing-free implies R(p) strongly monotone", n, [](const Permutation& p) {
        return !iterates_crossing_free(p) || is_strongly_monotone(patience_sort(p));
    }));
    std::optional<Permutation> witness;
    for (int m = 1; m <= n && !witness; ++m) {
        witness = first_violation(m, [](const Permutation& p) {
            return !is_strongly_monotone(patience_sort(p)) || !has_polygonal_crossing(p);
        });
    }
    r.properties.push_back({"some strongly monotone R(p) has a polygonal crossing", witness.has_value(),
                            witness ? "witness " + show(*witness) : "no witness for n <= " + std::to_string(n)});
    return r;
}

std::uint64_t encode(const Permutation& p) {
    std::uint64_t key = 0;
    for (int v : p.word()) key = key * 16 + static_cast<std::uint64_t>(v);
    return key;
}

SuiteReport suite_thm37(int n) {
    require_sweep_bound(n);
    SuiteReport r = make("thm3.7", "R(p) has a unique preimage iff p avoids 3-!1-42 and 3-!1-24", n);
    const auto a = matcher("3-!1-42");
    const auto b = matcher("3-!1-24");
    const CountTable table = f_table(n);
    PropertyResult iff{"class of p under patience sorting is a singleton iff p avoids 3-!1-42 and 3-!1-24", true, ""};
    PropertyResult total{"#{p : R(p) has a unique preimage} = f(n)", true, ""};
    Counts singles;
    for (int m = 1; m <= n && iff.passed; ++m) {
        using Classes = std::unordered_map<std::uint64_t, std::uint32_t>;
        const Classes sizes = sweep_symmetric_group(
            m, Classes{}, [](Classes& acc, const Permutation& p) { ++acc[encode(rpw_of(p))]; },
            [](Classes& into, Classes&& from) {
                for (const auto& [k, v] : from) into[k] += v;
            });
        std::uint64_t unique = 0;
        for (const auto& [k, v] : sizes) unique += v == 1;
        singles.push_back(unique);
        if (auto w = first_violation(m, [&](const Permutation& p) {
                return (sizes.at(encode(rpw_of(p))) == 1) == (avoid(a, p) && avoid(b, p));
            })) {
            iff = {iff.statement, false, "n = " + std::to_string(m) + ": " + show(*w)};
        }
        if (BigNat(unique) != table.f_n[static_cast<std::size_t>(m)]) total.passed = false;
    }
    if (iff.passed) iff.detail = "checked n = 1.." + std::to_string(n);
    total.detail = join(singles);
    r.properties.push_back(std::move(iff));
    r.properties.push_back(std::move(total));
    return r;
}

SuiteReport suite_thm39(int n) {
    if (n < 1) throw ParseError("--n must be positive");
    SuiteReport r = make("thm3.9", "f = (I - A)^-1 F with A the convolved Fibonacci triangle", n);
    const CountTable table = f_table(n - 1);
    const auto alt = f_alt(n - 1);
    const auto solved = matrix_solve(n);
    const LowerTriMatrix a = matrix_A(n);
    {
        PropertyResult p{"recurrence table, index-shifted convolution recurrence and matrix solve agree", true, ""};
        for (int m = 0; m < n && p.passed; ++m) {
            const auto i = static_cast<std::size_t>(m);
            if (table.f_n[i] != alt[i] || table.f_n[i] != solved[i]) {
                p = {p.statement, false, "n = " + std::to_string(m) + ": " + table.f_n[i].str() + ", " + alt[i].str() + ", " + solved[i].str()};
            }
        }
        if (p.passed) p.detail = "f(" + std::to_string(n - 1) + ") = " + table.f_n.back().str();
        r.properties.push_back(std::move(p));
    }
    {
        PropertyResult p{"f(n) = sum_m a(n,m) f(m) + F(n-1)", true, "checked n = 1.." + std::to_string(n - 1)};
        for (int m = 1; m < n && p.passed; ++m) {
            BigNat acc = fib(m - 1);
            for (int j = 0; j < m; ++j) acc += a(m, j) * table.f_n[static_cast<std::size_t>(j)];
            if (acc != table.f_n[static_cast<std::size_t>(m)]) p = {p.statement, false, "n = " + std::to_string(m)};
        }
        r.properties.push_back(std::move(p));
    }
    {
        PropertyResult p{"column m of A = coefficients of x^(m+2) / (1 - x - x^2)^(m+1)", true, ""};
        const TruncatedSeries kernel = TruncatedSeries(n, {1, -1, -1}).inverse();
        TruncatedSeries power = TruncatedSeries::monomial(n, 2) * kernel;
        for (int m = 0; m < n && p.passed; ++m) {
            for (int i = 0; i < n; ++i) {
                if (Rational(a(i, m)) != power[i]) {
                    p = {p.statement, false, "a(" + std::to_string(i) + "," + std::to_string(m) + ")"};
                    break;
                }
            }
            power = power * TruncatedSeries::monomial(n, 1) * kernel;
        }
        r.properties.push_back(std::move(p));
    }
    {
        PropertyResult p{"c(k,m) = a(k,m)", true, ""};
        const auto c = c_coeffs(std::max(n - 1, 2));
        for (int k = 2; k < n && p.passed; ++k) {
            for (int m = 0; m <= k; ++m) {
                if (c[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] != a(k, m)) {
                    p = {p.statement, false, "k = " + std::to_string(k) + ", m = " + std::to_string(m)};
                    break;
                }
            }
        }
        r.properties.push_back(std::move(p));
    }
    r.properties.push_back({"(I - A)^-1 = I + A + A^2 + ..., nonnegative, each power two diagonals lower",
                            neumann_check(n, (n + 1) / 2), ""});
    return r;
}

SuiteReport suite_series(int n) {
    if (n < 4) throw ParseError("--n must be at least 4 for the series suite");
    SuiteReport r = make("series", "generating-function identities on exact truncated series", n);
    r.properties.push_back({"(1-y-xy-x^2y^2) Phi(x,y) = 1-y-xy+xy^2 - xy^2 Phi(xy,1) + xy(1-y-xy) Phi(x,1)",
                            phi_equation_check(n), "total degree <= " + std::to_string(n)});
    const TruncatedSeries radicand(n, {1, 2, 5});
    const TruncatedSeries root = radicand.sqrt();
    r.properties.push_back({"sqrt(1+2x+5x^2)^2 = 1+2x+5x^2", root * root == radicand, ""});
    TruncatedSeries s = root - TruncatedSeries(n, {1, 1});
    s *= Rational(1, 2);
    r.properties.push_back({"s(x) = (sqrt(1+2x+5x^2) - x - 1)/2 has s(0) = s'(0) = 0", s[0] == 0 && s[1] == 0, ""});
    bool kernel = false;
    std::string detail = "degree <= " + std::to_string(n);
    try {
        kernel = kernel_identity_check(n);
    } catch (const CompositionNotWellDefined& e) {
        detail = e.what();
    }
    r.properties.push_back({"x + 1 + s(x) F(x) - F(s(x)/x) = 0", kernel, detail});
    return r;
}

using SuiteFn = SuiteReport (*)(int);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
    static const std::map<std::string, SuiteFn, std::less<>> suites = {
        {"thm2.2", suite_thm22}, {"cor2.4", suite_cor24}, {"prop3.1", suite_prop31}, {"prop3.2", suite_prop32},
        {"cor3.4", suite_cor34}, {"thm3.5", suite_thm35}, {"thm3.6", suite_thm36}, {"thm3.7", suite_thm37},
        {"thm3.9", suite_thm39}, {"series", suite_series},
    };
    return suites;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"thm2.2", "cor2.4", "prop3.1", "prop3.2", "cor3.4",
                                                   "thm3.5", "thm3.6", "thm3.7",  "thm3.9",  "series"};
    return names;
}

SuiteReport run_suite(std::string_view suite, int n) {
    const auto& suites = registry();
    const auto it = suites.find(suite);
    if (it == suites.end()) throw ParseError("unknown suite '" + std::string(suite) + "'");
    return it->second(n);
}

std::string format_report(const SuiteReport& report) {
    std::ostringstream out;
    out << report.suite << ": " << report.header << " (n <= " << report.n << ")\n";
    for (const PropertyResult& p : report.properties) {
        out << (p.passed ? "PASS  " : "FAIL  ") << p.statement << '\n';
        if (!p.detail.empty()) out << "      " << (p.passed ? "" : "counterexample: ") << p.detail << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace patience
