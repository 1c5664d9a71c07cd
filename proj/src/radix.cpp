#include "cantor/radix.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cantor {

const char* alphabet_name(alphabet_tag a) {
    switch (a) {
    case alphabet_tag::nary: return "nary";
    case alphabet_tag::delta: return "delta";
    case alphabet_tag::delta_plus: return "delta_plus";
    case alphabet_tag::d_only: return "d_only";
    }
    return "nary";
}

alphabet_tag alphabet_from_name(const std::string& s) {
    if (s == "nary") return alphabet_tag::nary;
    if (s == "delta") return alphabet_tag::delta;
    if (s == "delta_plus" || s == "delta+") return alphabet_tag::delta_plus;
    if (s == "d_only" || s == "d") return alphabet_tag::d_only;
    fail(errc::invalid_argument, "unknown alphabet: " + s);
}

int PeriodicCode::digit_at(int k) const {
    if (k < 1) fail(errc::invalid_argument, "digit index starts at 1");
    int pre = static_cast<int>(preperiod.size());
    if (k <= pre) return preperiod[k - 1];
    if (period.empty()) {
        if (prefix_only) fail(errc::undecided_prefix, "digit beyond the known prefix");
        return 0;
    }
    return period[(k - pre - 1) % period.size()];
}

bool PeriodicCode::finite_rep() const {
    if (prefix_only) return false;
    for (int d : period)
        if (d != 0) return false;
    return true;
}

bool PeriodicCode::all_max_tail(int maxdigit) const {
    if (prefix_only || period.empty()) return false;
    for (int d : period)
        if (d != maxdigit) return false;
    return true;
}

PeriodicCode canonical(PeriodicCode code) {
    if (code.prefix_only) {
        code.period.clear();
        return code;
    }
    if (code.period.empty()) code.period = {0};

    // primitive period
    size_t p = code.period.size();
    for (size_t d = 1; d <= p / 2; ++d) {
        if (p % d) continue;
        bool rep = true;
        for (size_t i = d; i < p && rep; ++i)
            if (code.period[i] != code.period[i % d]) rep = false;
        if (rep) {
            code.period.resize(d);
            break;
        }
    }

    // absorb preperiod tail into the period
    while (!code.preperiod.empty() && code.preperiod.back() == code.period.back()) {
        code.preperiod.pop_back();
        std::rotate(code.period.begin(), code.period.end() - 1, code.period.end());
    }

    // n-ary codes avoid a trailing all-(n-1) period except for the value 1
    if (code.alphabet == alphabet_tag::nary && code.period.size() == 1 &&
        code.period[0] == code.base - 1 && !code.preperiod.empty()) {
        Rat v = value_of(code);
        return code_from_rational(v, code.base, alphabet_tag::nary);
    }
    return code;
}

void validate_code(const DigitSet& ds, const PeriodicCode& code) {
    if (code.base != ds.base()) fail(errc::invalid_argument, "code base does not match digit set");
    auto check = [&](int d) {
        bool ok = false;
        switch (code.alphabet) {
        case alphabet_tag::nary: ok = d >= 0 && d < code.base; break;
        case alphabet_tag::delta: ok = ds.in_delta(d); break;
        case alphabet_tag::delta_plus: ok = ds.in_delta_plus(d); break;
        case alphabet_tag::d_only: ok = ds.contains(d); break;
        }
        if (!ok)
            fail(errc::invalid_argument,
                 "digit " + std::to_string(d) + " not in alphabet " + alphabet_name(code.alphabet));
    };
    for (int d : code.preperiod) check(d);
    for (int d : code.period) check(d);
}

Rat value_of(const PeriodicCode& code) {
    if (code.prefix_only)
        fail(errc::undecided_prefix, "prefix code has no exact value");
    int n = code.base;
    Int pre = 0;
    for (int d : code.preperiod) pre = pre * n + d;
    Int na = pow_int(n, static_cast<unsigned>(code.preperiod.size()));
    if (code.period.empty()) return Rat(pre, na);
    Int per = 0;
    for (int d : code.period) per = per * n + d;
    Int nb = pow_int(n, static_cast<unsigned>(code.period.size()));
    // 0.PRE(PERIOD) = (PRE (n^b - 1) + PERIOD) / (n^a (n^b - 1))
    return Rat(pre * (nb - 1) + per, na * (nb - 1));
}

Rat truncate_value(const PeriodicCode& code, int k) {
    if (k < 0) fail(errc::invalid_argument, "negative truncation depth");
    if (code.prefix_only && k > static_cast<int>(code.preperiod.size()))
        fail(errc::undecided_prefix, "truncation beyond the known prefix");
    Int acc = 0;
    for (int j = 1; j <= k; ++j) acc = acc * code.base + code.digit_at(j);
    return Rat(acc, pow_int(code.base, static_cast<unsigned>(k)));
}

namespace {

PeriodicCode nary_from_rational(const Rat& value, int base) {
    PeriodicCode code;
    code.base = base;
    code.alphabet = alphabet_tag::nary;
    if (value == 1) {
        code.period = {base - 1};
        return code;
    }
    std::map<Rat, int> seen; // remainder -> digit index where it appeared
    std::vector<int> digits;
    Rat rem = value;
    while (true) {
        auto it = seen.find(rem);
        if (it != seen.end()) {
            code.preperiod.assign(digits.begin(), digits.begin() + it->second);
            code.period.assign(digits.begin() + it->second, digits.end());
            return canonical(code);
        }
        seen.emplace(rem, static_cast<int>(digits.size()));
        Rat scaled = rem * base;
        Int d = floor_rat(scaled);
        digits.push_back(static_cast<int>(d));
        rem = scaled - Rat(d);
        if (rem == 0) {
            code.preperiod = digits;
            code.period = {0};
            return canonical(code);
        }
    }
}

// Greedy search with dead-state pruning over the finite remainder graph of
// r' = n r - a, a in the alphabet, r constrained to [min(A),max(A)]/(n-1).
PeriodicCode restricted_from_rational(const Rat& value, int base, alphabet_tag alphabet,
                                      const DigitSet& ds) {
    std::vector<int> digits_pool;
    switch (alphabet) {
    case alphabet_tag::delta: digits_pool = ds.differences().deltas; break;
    case alphabet_tag::delta_plus: digits_pool = ds.differences().deltas_plus; break;
    case alphabet_tag::d_only: digits_pool = ds.digits(); break;
    default: fail(errc::invalid_argument, "restricted search needs a restricted alphabet");
    }
    Rat lo = Rat(digits_pool.front(), base - 1);
    Rat hi = Rat(digits_pool.back(), base - 1);
    if (value < lo || value > hi)
        fail(errc::not_representable, "value outside the alphabet's representable range");

    // reachable states
    std::set<Rat> states;
    std::vector<Rat> frontier{value};
    states.insert(value);
    const size_t state_cap = 200000;
    while (!frontier.empty()) {
        Rat r = frontier.back();
        frontier.pop_back();
        for (int a : digits_pool) {
            Rat r2 = r * base - a;
            if (r2 < lo || r2 > hi) continue;
            if (states.insert(r2).second) {
                if (states.size() > state_cap)
                    fail(errc::budget_exceeded, "digit search state space too large");
                frontier.push_back(r2);
            }
        }
    }
    // prune states with no in-range successor
    std::set<Rat> alive = states;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = alive.begin(); it != alive.end();) {
            bool ok = false;
            for (int a : digits_pool) {
                Rat r2 = *it * base - a;
                if (r2 >= lo && r2 <= hi && alive.count(r2)) { ok = true; break; }
            }
            if (!ok) {
                it = alive.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    if (!alive.count(value))
        fail(errc::not_representable, "value has no expansion over this alphabet");

    // follow the smallest feasible digit until a state repeats
    PeriodicCode code;
    code.base = base;
    code.alphabet = alphabet;
    std::map<Rat, int> pos;
    std::vector<int> digits;
    Rat r = value;
    while (true) {
        auto it = pos.find(r);
        if (it != pos.end()) {
            code.preperiod.assign(digits.begin(), digits.begin() + it->second);
            code.period.assign(digits.begin() + it->second, digits.end());
            return canonical(code);
        }
        pos.emplace(r, static_cast<int>(digits.size()));
        bool advanced = false;
        for (int a : digits_pool) {
            Rat r2 = r * base - a;
            if (r2 >= lo && r2 <= hi && alive.count(r2)) {
                digits.push_back(a);
                r = r2;
                advanced = true;
                break;
            }
        }
        if (!advanced) fail(errc::not_representable, "digit search dead end");
    }
}

} // namespace

PeriodicCode code_from_rational(const Rat& value, int base, alphabet_tag alphabet,
                                const DigitSet* ds) {
    if (base < 3) fail(errc::invalid_argument, "base must be at least 3");
    if (alphabet == alphabet_tag::nary) {
        if (value < 0 || value > 1)
            fail(errc::invalid_argument, "n-ary codes cover [0,1]");
        return nary_from_rational(value, base);
    }
    if (!ds) fail(errc::invalid_argument, "restricted alphabets need a digit set");
    return restricted_from_rational(value, base, alphabet, *ds);
}

PeriodicCode abs_canonicalize(const DigitSet& ds, const PeriodicCode& code) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    if (code.alphabet != alphabet_tag::delta && code.alphabet != alphabet_tag::delta_plus &&
        code.alphabet != alphabet_tag::d_only)
        fail(errc::invalid_argument, "abs_canonicalize expects a difference-alphabet code");
    PeriodicCode out = code;
    out.alphabet = alphabet_tag::delta_plus;
    for (int& d : out.preperiod) d = std::abs(d);
    for (int& d : out.period) d = std::abs(d);
    return canonical(out);
}

namespace {

std::vector<int> parse_digit_run(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    if (s.find('.') != std::string::npos || s.find('-') != std::string::npos) {
        size_t i = 0;
        while (i < s.size()) {
            size_t j = s.find('.', i);
            if (j == std::string::npos) j = s.size();
            if (j == i) fail(errc::invalid_argument, "empty digit in code");
            out.push_back(std::stoi(s.substr(i, j - i)));
            i = j + 1;
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') fail(errc::invalid_argument, "bad digit character in code");
            out.push_back(c - '0');
        }
    }
    return out;
}

} // namespace

PeriodicCode parse_code(const std::string& text, int base, alphabet_tag alphabet) {
    PeriodicCode code;
    code.base = base;
    code.alphabet = alphabet;
    std::string s = text;
    // a leading '-' is the sign of the value, except for difference codes
    // where it belongs to a negative first digit
    if (!s.empty() && s[0] == '-' && alphabet != alphabet_tag::delta) {
        code.sign = -1;
        s = s.substr(1);
    }
    if (s.size() >= 3 && s.substr(s.size() - 3) == "...") {
        code.prefix_only = true;
        code.preperiod = parse_digit_run(s.substr(0, s.size() - 3));
        return code;
    }
    auto open = s.find('(');
    if (open == std::string::npos) {
        code.preperiod = parse_digit_run(s);
        code.period = {0};
    } else {
        auto close = s.find(')', open);
        if (close == std::string::npos || close != s.size() - 1)
            fail(errc::invalid_argument, "expected PRE(PERIOD) form: " + text);
        code.preperiod = parse_digit_run(s.substr(0, open));
        code.period = parse_digit_run(s.substr(open + 1, close - open - 1));
        if (code.period.empty()) fail(errc::invalid_argument, "empty period in: " + text);
    }
    for (int d : code.preperiod)
        if (d <= -base || d >= base) fail(errc::invalid_argument, "digit out of range");
    for (int d : code.period)
        if (d <= -base || d >= base) fail(errc::invalid_argument, "digit out of range");
    return canonical(code);
}

std::string format_code(const PeriodicCode& code) {
    bool dotted = false;
    for (int d : code.preperiod)
        if (d >= 10 || d < 0) dotted = true;
    for (int d : code.period)
        if (d >= 10 || d < 0) dotted = true;
    auto run = [&](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (dotted && i) s += '.';
            s += std::to_string(v[i]);
        }
        return s;
    };
    std::string out = code.sign < 0 ? "-" : "";
    out += run(code.preperiod);
    if (code.prefix_only) return out + "...";
    out += "(" + run(code.period) + ")";
    return out;
}

} // namespace cantor
