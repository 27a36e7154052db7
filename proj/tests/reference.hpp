#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "pcw/sk.hpp"

namespace ref {

// A plain tree over K and S, rewritten in place without sharing.
struct Node;
using Tree = std::shared_ptr<const Node>;

struct Node {
    char leaf = 0;  // 'K', 'S', or 0 for an application
    Tree l, r;
};

Tree leaf(char c);
Tree app(Tree f, Tree a);
std::string show(const Tree& t);

Tree from_sk(const pcw::Sk& e);
pcw::Sk to_sk(const Tree& t);

struct Result {
    std::optional<Tree> value;  // empty when the budget ran out
    std::uint64_t steps = 0;
};

// Normal form by leftmost-outermost rewriting: contract the head redex until the head is
// K or S short of arguments, then normalize the arguments left to right.
Result normalize(const Tree& t, std::uint64_t budget);

// Gödel code over 128-bit integers, with the Cantor pair found by search.
using u128 = unsigned __int128;
std::optional<u128> encode(const Tree& t);
Tree decode(u128 n);
std::string to_string(u128 n);

}  // namespace ref
