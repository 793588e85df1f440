#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace prymtyurin
{

using Point = std::uint32_t;

//---------------------------------------------------------------------------//
/*!
 * Bijection of {0, ..., degree-1}, stored as its image array.
 *
 * Products compose as functions: (a * b)(x) = a(b(x)). Ordering is
 * lexicographic on the image arrays, which makes the identity the least
 * permutation of any degree.
 */
class Permutation
{
  public:
    Permutation() = default;

    explicit Permutation(std::vector<Point> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size(), false);
        for (Point p : images_) {
            if (p >= images_.size() || seen[p])
                throw InvalidArgument("image array is not a bijection");
            seen[p] = true;
        }
    }

    static Permutation identity(std::size_t degree)
    {
        std::vector<Point> img(degree);
        std::iota(img.begin(), img.end(), Point{0});
        Permutation p;
        p.images_ = std::move(img);
        return p;
    }

    //! Product of disjoint or overlapping cycles given with 0-based points,
    //! applied right to left.
    static Permutation from_cycles(std::size_t degree, std::vector<std::vector<Point>> const& cycles)
    {
        Permutation result = identity(degree);
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
            auto const& cyc = *it;
            Permutation c = identity(degree);
            std::vector<bool> used(degree, false);
            for (Point p : cyc) {
                if (p >= degree)
                    throw InvalidArgument("cycle point " + std::to_string(p + 1) + " exceeds degree " +
                                          std::to_string(degree));
                if (used[p])
                    throw InvalidArgument("cycle repeats point " + std::to_string(p + 1));
                used[p] = true;
            }
            for (std::size_t i = 0; i < cyc.size(); ++i)
                c.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
            result = c * result;
        }
        return result;
    }

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator()(Point x) const { return images_[x]; }
    std::vector<Point> const& images() const noexcept { return images_; }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i] != i)
                return false;
        }
        return true;
    }

    Permutation inverse() const
    {
        Permutation p;
        p.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            p.images_[images_[i]] = static_cast<Point>(i);
        return p;
    }

    friend Permutation operator*(Permutation const& a, Permutation const& b)
    {
        if (a.degree() != b.degree())
            throw InvalidArgument("permutation degrees differ");
        Permutation p;
        p.images_.resize(a.images_.size());
        for (std::size_t i = 0; i < a.images_.size(); ++i)
            p.images_[i] = a.images_[b.images_[i]];
        return p;
    }

    //! Disjoint cycle decomposition, 0-based, fixed points omitted.
    std::vector<std::vector<Point>> cycles() const
    {
        std::vector<std::vector<Point>> out;
        std::vector<bool> seen(images_.size(), false);
        for (Point start = 0; start < images_.size(); ++start) {
            if (seen[start] || images_[start] == start)
                continue;
            std::vector<Point> cyc;
            for (Point p = start; !seen[p]; p = images_[p]) {
                seen[p] = true;
                cyc.push_back(p);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    std::size_t order() const
    {
        std::size_t result = 1;
        for (auto const& c : cycles())
            result = std::lcm(result, c.size());
        return result;
    }

    //! 1-based cycle notation, e.g. "(1,2)(3,4,5)"; the identity is "()".
    std::string to_cycle_string() const
    {
        auto cyc = cycles();
        if (cyc.empty())
            return "()";
        std::ostringstream os;
        for (auto const& c : cyc) {
            os << '(';
            for (std::size_t i = 0; i < c.size(); ++i)
                os << (i ? "," : "") << c[i] + 1;
            os << ')';
        }
        return os.str();
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend std::strong_ordering operator<=>(Permutation const& a, Permutation const& b)
    {
        if (auto c = a.images_.size() <=> b.images_.size(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                      b.images_.begin(), b.images_.end());
    }

  private:
    std::vector<Point> images_;
};

struct PermutationHash
{
    std::size_t operator()(Permutation const& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Point x : p.images()) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

//---------------------------------------------------------------------------//
/*!
 * Parse 1-based cycle notation such as "(1,2)(3,4)" or "()".
 *
 * `base_offset` is added to reported error positions so callers embedding
 * the text in a larger string get positions relative to their input.
 */
inline Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t base_offset = 0)
{
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size())
        throw ParseError("empty cycle text", base_offset + i);
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("expected '('", base_offset + i);
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        if (i < text.size() && text[i] == ')') {
            ++i;
            skip_ws();
            continue;
        }
        while (true) {
            skip_ws();
            std::size_t const start = i;
            std::size_t value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + static_cast<std::size_t>(text[i] - '0');
                ++i;
            }
            if (i == start)
                throw ParseError("expected a point number", base_offset + i);
            if (value == 0 || value > degree)
                throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree),
                                 base_offset + start);
            cyc.push_back(static_cast<Point>(value - 1));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ')'", base_offset + i);
        }
        cycles.push_back(std::move(cyc));
        skip_ws();
    }
    try {
        return Permutation::from_cycles(degree, cycles);
    } catch (InvalidArgument const& err) {
        throw ParseError(err.what(), base_offset);
    }
}

}  // namespace prymtyurin

template <>
struct std::hash<prymtyurin::Permutation> : prymtyurin::PermutationHash
{
};
