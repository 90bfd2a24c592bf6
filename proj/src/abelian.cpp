#include "verlinde/abelian.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace verlinde {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix identity(std::size_t n)
{
    BigMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

// floor(p/q) for q > 0
BigInt floor_div(const BigInt& p, const BigInt& q)
{
    BigInt quot = p / q;
    if (p < 0 && quot * q != p) {
        --quot;
    }
    return quot;
}

Rational fractional_part(const Rational& x)
{
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    return x - Rational(floor_div(num, den));
}

void validate(const AffineMultisection& m)
{
    if (m.genus < 1) {
        throw std::invalid_argument("multisection genus must be >= 1");
    }
    const auto g = static_cast<std::size_t>(m.genus);
    for (std::size_t c = 0; c < m.components.size(); ++c) {
        const auto& comp = m.components[c];
        bool shape_ok = comp.matrix.size() == g && comp.shift.size() == g;
        for (const auto& row : comp.matrix) {
            shape_ok = shape_ok && row.size() == g;
        }
        if (!shape_ok) {
            throw std::invalid_argument("component " + std::to_string(c) +
                                        " does not have shape g x g with a length-g shift");
        }
        for (const auto& t : comp.shift) {
            if (t < 0 || t >= 1) {
                throw std::invalid_argument("component " + std::to_string(c) +
                                            " has a shift entry outside [0, 1)");
            }
        }
    }
}

BigInt abs_determinant(const SmithNormalForm& snf)
{
    BigInt det = 1;
    for (const auto& d : snf.diagonal) {
        det *= d;
    }
    return det;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& input)
{
    const std::size_t rows = input.size();
    const std::size_t cols = rows == 0 ? 0 : input[0].size();
    BigMatrix a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (input[i].size() != cols) {
            throw std::invalid_argument("smith_normal_form: ragged matrix");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = input[i][j];
        }
    }
    BigMatrix u = identity(rows);
    BigMatrix v = identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) {
            std::swap(row[i], row[j]);
        }
        for (auto& row : v) {
            std::swap(row[i], row[j]);
        }
    };
    // row_i -= q * row_j
    auto sub_row = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t c = 0; c < cols; ++c) {
            a[i][c] -= q * a[j][c];
        }
        for (std::size_t c = 0; c < rows; ++c) {
            u[i][c] -= q * u[j][c];
        }
    };
    auto sub_col = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t r = 0; r < rows; ++r) {
            a[r][i] -= q * a[r][j];
        }
        for (std::size_t r = 0; r < cols; ++r) {
            v[r][i] -= q * v[r][j];
        }
    };

    const std::size_t n = std::min(rows, cols);
    for (std::size_t s = 0; s < n; ++s) {
        while (true) {
            // Move the smallest nonzero entry of the trailing block to (s, s).
            std::size_t pr = s;
            std::size_t pc = s;
            bool found = false;
            for (std::size_t i = s; i < rows; ++i) {
                for (std::size_t j = s; j < cols; ++j) {
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            }
            if (!found) {
                break;
            }
            swap_rows(s, pr);
            swap_cols(s, pc);

            bool clean = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (a[i][s] != 0) {
                    sub_row(i, s, a[i][s] / a[s][s]);
                    clean = clean && a[i][s] == 0;
                }
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (a[s][j] != 0) {
                    sub_col(j, s, a[s][j] / a[s][s]);
                    clean = clean && a[s][j] == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            bool divides = true;
            for (std::size_t i = s + 1; i < rows && divides; ++i) {
                for (std::size_t j = s + 1; j < cols; ++j) {
                    if (a[i][j] % a[s][s] != 0) {
                        for (std::size_t c = 0; c < cols; ++c) {
                            a[s][c] += a[i][c];
                        }
                        for (std::size_t c = 0; c < rows; ++c) {
                            u[s][c] += u[i][c];
                        }
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (a[s][s] < 0) {
            for (std::size_t c = 0; c < cols; ++c) {
                a[s][c] = -a[s][c];
            }
            for (std::size_t c = 0; c < rows; ++c) {
                u[s][c] = -u[s][c];
            }
        }
    }

    SmithNormalForm out;
    for (std::size_t s = 0; s < n; ++s) {
        out.diagonal.push_back(a[s][s]);
    }
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

std::vector<Characteristic> bs_points(const TorusFibration& f, std::uint64_t max_points)
{
    if (f.genus < 1 || f.level < 1) {
        throw std::invalid_argument("torus fibration needs g >= 1 and k >= 1");
    }
    const auto total = saturating_pow(static_cast<std::uint64_t>(f.level),
                                      static_cast<std::uint64_t>(f.genus));
    if (total > max_points) {
        throw BudgetExceeded("bs_points would list k^g = " + std::to_string(total) +
                             " characteristics, above the budget of " +
                             std::to_string(max_points) + "; the count alone is k^g");
    }
    std::vector<Characteristic> out;
    out.reserve(static_cast<std::size_t>(total));
    Characteristic w{f.level, std::vector<int>(static_cast<std::size_t>(f.genus), 0)};
    while (true) {
        out.push_back(w);
        std::size_t i = w.residues.size();
        while (i > 0 && w.residues[i - 1] == f.level - 1) {
            w.residues[--i] = 0;
        }
        if (i == 0) {
            break;
        }
        ++w.residues[i - 1];
    }
    return out;
}

Characteristic translate_label(const Characteristic& w, const Characteristic& v)
{
    if (w.level != v.level || w.residues.size() != v.residues.size()) {
        throw std::invalid_argument("translate_label: characteristics of different (g, k)");
    }
    Characteristic out{w.level, w.residues};
    for (std::size_t i = 0; i < out.residues.size(); ++i) {
        out.residues[i] = (w.residues[i] + v.residues[i]) % w.level;
    }
    return out;
}

BigInt gft_intersection_count(const AffineMultisection& m)
{
    validate(m);
    BigInt total = 0;
    for (std::size_t c = 0; c < m.components.size(); ++c) {
        const BigInt det = abs_determinant(smith_normal_form(m.components[c].matrix));
        if (det == 0) {
            throw SingularMultisection("component " + std::to_string(c) +
                                       " has det A = 0: non-generic multisection, "
                                       "intersection is positive-dimensional");
        }
        total += det;
    }
    return total;
}

std::vector<EbsFibre> e_bs_fibres(const AffineMultisection& m)
{
    validate(m);
    const auto g = static_cast<std::size_t>(m.genus);
    std::vector<EbsFibre> out;
    for (std::size_t c = 0; c < m.components.size(); ++c) {
        const auto& comp = m.components[c];
        const SmithNormalForm snf = smith_normal_form(comp.matrix);
        if (abs_determinant(snf) == 0) {
            throw SingularMultisection("component " + std::to_string(c) +
                                       " has det A = 0: non-generic multisection, "
                                       "intersection is positive-dimensional");
        }
        // A b = -t + n  <=>  D y = -U t + U n  with  y = V^{-1} b.
        std::vector<Rational> rhs(g, Rational(0));
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < g; ++j) {
                rhs[i] -= Rational(snf.left[i][j]) * comp.shift[j];
            }
        }
        std::vector<BigInt> offset(g, 0);
        while (true) {
            std::vector<Rational> y(g);
            for (std::size_t i = 0; i < g; ++i) {
                y[i] = (rhs[i] + Rational(offset[i])) / Rational(snf.diagonal[i]);
            }
            EbsFibre fibre;
            fibre.component = static_cast<int>(c);
            fibre.point.assign(g, Rational(0));
            for (std::size_t i = 0; i < g; ++i) {
                Rational b = 0;
                for (std::size_t j = 0; j < g; ++j) {
                    b += Rational(snf.right[i][j]) * y[j];
                }
                fibre.point[i] = fractional_part(b);
            }
            out.push_back(std::move(fibre));

            std::size_t i = g;
            while (i > 0 && offset[i - 1] + 1 == snf.diagonal[i - 1]) {
                offset[--i] = 0;
            }
            if (i == 0) {
                break;
            }
            ++offset[i - 1];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace verlinde
