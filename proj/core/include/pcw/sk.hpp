#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "pcw/kernel.hpp"

namespace pcw {

class SkNode;

// Immutable applicative tree over {K, S}. Normal forms are K, S, K x, S x, S x y with
// normal x, y; arbitrary trees are allowed as inputs and are reduced on application.
class Sk {
public:
    enum class Tag : std::uint8_t { K, S, Poison, App };

    static Sk K();
    static Sk S();
    // A leaf used only to instrument evaluation: applying it throws PoisonError.
    static Sk poison();
    static Sk app(Sk f, Sk a);

    Tag tag() const;
    bool is_leaf() const { return tag() != Tag::App; }
    const Sk& left() const;
    const Sk& right() const;
    std::size_t hash() const;
    bool normal() const;
    std::uint64_t size() const;  // node count, saturating
    std::uint32_t depth() const;

    const SkNode* node() const { return n_.get(); }
    explicit Sk(std::shared_ptr<const SkNode> n) : n_(std::move(n)) {}
    Sk() = default;

    friend bool operator==(const Sk& a, const Sk& b);
    friend bool operator!=(const Sk& a, const Sk& b) { return !(a == b); }

private:
    std::shared_ptr<const SkNode> n_;
};

class SkNode : public std::enable_shared_from_this<SkNode> {
public:
    Sk::Tag tag;
    Sk::Tag head;       // leftmost leaf
    std::uint8_t args;  // number of arguments applied to the head, saturating at 3
    bool normal;
    std::uint32_t depth;
    std::uint64_t size;
    std::size_t hash;
    Sk left, right;
};

struct PoisonError : std::runtime_error {
    PoisonError() : std::runtime_error("poison element was applied") {}
};

// Weak normal form of (a b) by leftmost-outermost graph reduction; one fuel unit per
// K or S contraction.
Outcome<Sk> sk_apply(const Sk& a, const Sk& b, Fuel& fuel);
Outcome<Sk> sk_normalize(const Sk& t, Fuel& fuel);

// Plain-text rendering over K and S, used for diagnostics (the term printer is richer).
std::string sk_debug_string(const Sk& t);

class SkModel {
public:
    using Element = Sk;

    Outcome<Sk> apply(const Sk& a, const Sk& b, Fuel& fuel) const { return sk_apply(a, b, fuel); }
    bool leq(const Sk& a, const Sk& b) const { return a == b; }
    bool in_filter(const Sk&) const { return true; }
    Sk k() const { return Sk::K(); }
    Sk s() const { return Sk::S(); }
    const char* name() const { return "sk"; }
};

}  // namespace pcw

template <>
struct std::hash<pcw::Sk> {
    std::size_t operator()(const pcw::Sk& s) const { return s.hash(); }
};
