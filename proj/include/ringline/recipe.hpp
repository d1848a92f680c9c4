#pragma once

/**
 * @file recipe.hpp
 * @brief Serializable ring recipes.
 *
 * Text form (whitespace-free):
 *
 *   zn:N                       integers mod N
 *   gf:P[:K[:c0,c1,...,cK]]    GF(P^K) on the given (or default) modulus
 *   dual(R)                    R[x]/<x^2>, R commutative
 *   skew(R)                    R[x; Frobenius]/<x^2>
 *   prod(R1,R2)                direct product
 *   mat(R,n) / tri(R,n)        full / upper-triangular n x n matrices
 *   alg:M:K[:i*j=v0.v1...;...] structure constants over Z_M; e_0 is the unity
 *                              and unlisted products of basis vectors are 0
 *   closure(R,n[,g;g;...])     subring of M_n(R) generated by matrices g,
 *                              each written as row-major entries joined by '.'
 *   file:PATH                  ring table file
 *
 * The same recipe always evaluates to the same tables.
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ringline/ring_build.hpp"
#include "ringline/ring_file.hpp"

namespace ringline {

struct RingRecipe {
    enum class Kind { Zn, Gf, Dual, Skew, Product, Matrix, Triangular, Algebra, Closure, File };

    struct Product3 {
        std::size_t i, j;
        std::vector<int> value;
        friend bool operator==(const Product3&, const Product3&) = default;
    };

    Kind kind = Kind::Zn;
    std::vector<long> ints;  // Zn: {n}; Gf: {p, k}; Matrix/Triangular/Closure: {n}; Algebra: {m, k}
    std::vector<int> poly;   // Gf modulus, empty for default
    std::vector<RingRecipe> parts;
    std::vector<Product3> products;           // Algebra
    std::vector<std::vector<Elem>> generators;  // Closure
    std::string path;                         // File

    friend bool operator==(const RingRecipe&, const RingRecipe&) = default;
};

namespace detail {

template <class T>
std::string join(const std::vector<T>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

class RecipeParser {
public:
    explicit RecipeParser(std::string_view text) : text_(text) {}

    RingRecipe parse() {
        auto r = recipe();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::UnknownRecipe, "recipe '" + std::string(text_) + "' at offset " +
                                                  std::to_string(pos_) + ": " + what);
    }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        const auto start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    long number() {
        const auto start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected a number");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    std::vector<long> numbers(char sep) {
        std::vector<long> v{number()};
        while (eat(sep)) v.push_back(number());
        return v;
    }

    RingRecipe recipe() {
        const std::string head = word();
        RingRecipe r;
        if (head == "zn") {
            r.kind = RingRecipe::Kind::Zn;
            expect(':');
            r.ints = {number()};
        } else if (head == "gf") {
            r.kind = RingRecipe::Kind::Gf;
            expect(':');
            r.ints = {number(), 1};
            if (eat(':')) {
                r.ints[1] = number();
                if (eat(':'))
                    for (long c : numbers(',')) r.poly.push_back(static_cast<int>(c));
            }
        } else if (head == "dual" || head == "skew") {
            r.kind = head == "dual" ? RingRecipe::Kind::Dual : RingRecipe::Kind::Skew;
            expect('(');
            r.parts.push_back(recipe());
            expect(')');
        } else if (head == "prod") {
            r.kind = RingRecipe::Kind::Product;
            expect('(');
            r.parts.push_back(recipe());
            expect(',');
            r.parts.push_back(recipe());
            expect(')');
        } else if (head == "mat" || head == "tri") {
            r.kind = head == "mat" ? RingRecipe::Kind::Matrix : RingRecipe::Kind::Triangular;
            expect('(');
            r.parts.push_back(recipe());
            expect(',');
            r.ints = {number()};
            expect(')');
        } else if (head == "alg") {
            r.kind = RingRecipe::Kind::Algebra;
            expect(':');
            r.ints = {number()};
            expect(':');
            r.ints.push_back(number());
            if (eat(':')) {
                do {
                    RingRecipe::Product3 p;
                    p.i = static_cast<std::size_t>(number());
                    expect('*');
                    p.j = static_cast<std::size_t>(number());
                    expect('=');
                    for (long c : numbers('.')) p.value.push_back(static_cast<int>(c));
                    r.products.push_back(std::move(p));
                } while (eat(';'));
            }
        } else if (head == "closure") {
            r.kind = RingRecipe::Kind::Closure;
            expect('(');
            r.parts.push_back(recipe());
            expect(',');
            r.ints = {number()};
            if (eat(',')) {
                do {
                    std::vector<Elem> g;
                    for (long e : numbers('.')) g.push_back(static_cast<Elem>(e));
                    r.generators.push_back(std::move(g));
                } while (eat(';'));
            }
            expect(')');
        } else if (head == "file") {
            r.kind = RingRecipe::Kind::File;
            expect(':');
            r.path = std::string(text_.substr(pos_));
            pos_ = text_.size();
            if (r.path.empty()) fail("empty file path");
        } else {
            fail(head.empty() ? "expected a recipe" : "unknown constructor '" + head + "'");
        }
        return r;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RingRecipe parse_recipe(std::string_view text) { return detail::RecipeParser(text).parse(); }

inline std::string to_string(const RingRecipe& r) {
    using K = RingRecipe::Kind;
    switch (r.kind) {
        case K::Zn: return "zn:" + std::to_string(r.ints.at(0));
        case K::Gf: {
            std::string s = "gf:" + std::to_string(r.ints.at(0)) + ":" + std::to_string(r.ints.at(1));
            if (!r.poly.empty()) s += ":" + detail::join(r.poly, ',');
            return s;
        }
        case K::Dual: return "dual(" + to_string(r.parts.at(0)) + ")";
        case K::Skew: return "skew(" + to_string(r.parts.at(0)) + ")";
        case K::Product: return "prod(" + to_string(r.parts.at(0)) + "," + to_string(r.parts.at(1)) + ")";
        case K::Matrix: return "mat(" + to_string(r.parts.at(0)) + "," + std::to_string(r.ints.at(0)) + ")";
        case K::Triangular: return "tri(" + to_string(r.parts.at(0)) + "," + std::to_string(r.ints.at(0)) + ")";
        case K::Algebra: {
            std::string s = "alg:" + std::to_string(r.ints.at(0)) + ":" + std::to_string(r.ints.at(1));
            for (std::size_t i = 0; i < r.products.size(); ++i) {
                const auto& p = r.products[i];
                s += (i ? ";" : ":") + std::to_string(p.i) + "*" + std::to_string(p.j) + "=" + detail::join(p.value, '.');
            }
            return s;
        }
        case K::Closure: {
            std::string s = "closure(" + to_string(r.parts.at(0)) + "," + std::to_string(r.ints.at(0));
            for (std::size_t i = 0; i < r.generators.size(); ++i) s += (i ? ";" : ",") + detail::join(r.generators[i], '.');
            return s + ")";
        }
        case K::File: return "file:" + r.path;
    }
    return "";
}

/// Structure constants of an Algebra recipe: unity rows filled in, listed products applied.
inline std::vector<std::vector<std::vector<int>>> algebra_constants(const RingRecipe& r) {
    const auto k = static_cast<std::size_t>(r.ints.at(1));
    std::vector<std::vector<std::vector<int>>> c(k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    for (std::size_t i = 0; i < k; ++i) {
        c[0][i][i] = 1;
        c[i][0][i] = 1;
    }
    for (const auto& p : r.products) {
        if (p.i >= k || p.j >= k || p.value.size() != k)
            throw Error(ErrorCode::InvalidArgument, "structure constant " + std::to_string(p.i) + "*" +
                                                        std::to_string(p.j) + " does not fit rank " + std::to_string(k));
        c[p.i][p.j] = p.value;
    }
    return c;
}

inline FiniteRing evaluate(const RingRecipe& r) {
    using K = RingRecipe::Kind;
    auto positive = [](long v, const char* what) {
        if (v < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
        return static_cast<std::size_t>(v);
    };
    switch (r.kind) {
        case K::Zn: return ring_zn(positive(r.ints.at(0), "modulus"));
        case K::Gf: return ring_gf(static_cast<int>(r.ints.at(0)), positive(r.ints.at(1), "degree"), r.poly);
        case K::Dual: return quotient_dual_numbers(evaluate(r.parts.at(0)));
        case K::Skew: {
            const auto f = evaluate(r.parts.at(0));
            return skew_dual_numbers(f, frobenius(f));
        }
        case K::Product: return direct_product(evaluate(r.parts.at(0)), evaluate(r.parts.at(1)));
        case K::Matrix: return matrix_ring(evaluate(r.parts.at(0)), positive(r.ints.at(0), "dimension"));
        case K::Triangular: return triangular_ring(evaluate(r.parts.at(0)), positive(r.ints.at(0), "dimension"));
        case K::Algebra:
            return structure_constants_algebra(positive(r.ints.at(0), "modulus"), positive(r.ints.at(1), "rank"),
                                               algebra_constants(r));
        case K::Closure:
            return matrix_subring_closure(evaluate(r.parts.at(0)), positive(r.ints.at(0), "dimension"), r.generators);
        case K::File: return load_ring_file(r.path);
    }
    throw Error(ErrorCode::Internal, "unhandled recipe kind");
}

inline FiniteRing evaluate(std::string_view recipe_text) { return evaluate(parse_recipe(recipe_text)); }

}  // namespace ringline
