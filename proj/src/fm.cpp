#include "sqr/fm.hpp"

#include <algorithm>
#include <set>

#include "sqr/errors.hpp"

namespace sqr {

namespace {

// One inequality sum_j coeffs[j] * v_j >= rhs.
struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
};

// Scale so the first nonzero coefficient is +-1; canonical form for dedup.
void normalize(Row& r) {
    for (const Rational& c : r.coeffs) {
        if (c != 0) {
            Rational scale = abs(c);
            for (Rational& x : r.coeffs)
                x /= scale;
            r.rhs /= scale;
            return;
        }
    }
}

std::string key_of(const Row& r) {
    std::string k;
    for (const Rational& c : r.coeffs) {
        k += rational_to_string(c);
        k += ',';
    }
    k += '|';
    k += rational_to_string(r.rhs);
    return k;
}

// true => contradiction 0 >= rhs with rhs > 0
bool constant_contradiction(const Row& r) {
    for (const Rational& c : r.coeffs)
        if (c != 0)
            return false;
    return r.rhs > 0;
}

bool constant_trivial(const Row& r) {
    for (const Rational& c : r.coeffs)
        if (c != 0)
            return false;
    return r.rhs <= 0;
}

}  // namespace

FmVerdict fm_oracle(const LinearSystem& sys, std::size_t row_budget) {
    const std::size_t n = static_cast<std::size_t>(sys.num_vars);
    std::vector<Row> rows;
    for (const auto& eq : sys.equalities) {
        Row ge{eq, Rational(0)};
        Row le{eq, Rational(0)};
        for (Rational& c : le.coeffs)
            c = -c;
        rows.push_back(std::move(ge));
        rows.push_back(std::move(le));
    }
    for (std::size_t j = 0; j < n; ++j) {
        Row bound{std::vector<Rational>(n, Rational(0)), sys.lower_bound};
        bound.coeffs[j] = 1;
        rows.push_back(std::move(bound));
    }

    for (std::size_t var = 0; var < n; ++var) {
        std::vector<Row> lowers, uppers, rest;
        for (Row& r : rows) {
            const Rational& c = r.coeffs[var];
            if (c > 0)
                lowers.push_back(std::move(r));
            else if (c < 0)
                uppers.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        rows = std::move(rest);
        std::set<std::string> seen;
        for (Row& r : rows) {
            normalize(r);
            seen.insert(key_of(r));
        }
        for (const Row& lo : lowers) {
            for (const Row& up : uppers) {
                // (-up_c) * lo + lo_c * up eliminates var; both multipliers > 0
                const Rational a = lo.coeffs[var];
                const Rational b = -up.coeffs[var];
                Row combined{std::vector<Rational>(n, Rational(0)),
                             b * lo.rhs + a * up.rhs};
                for (std::size_t j = 0; j < n; ++j)
                    combined.coeffs[j] = b * lo.coeffs[j] + a * up.coeffs[j];
                if (constant_contradiction(combined))
                    return FmVerdict::Infeasible;
                if (constant_trivial(combined))
                    continue;
                normalize(combined);
                if (seen.insert(key_of(combined)).second)
                    rows.push_back(std::move(combined));
                if (rows.size() > row_budget)
                    throw TooLarge("elimination exceeded the row budget");
            }
        }
    }

    for (const Row& r : rows)
        if (constant_contradiction(r))
            return FmVerdict::Infeasible;
    return FmVerdict::Feasible;
}

}  // namespace sqr
