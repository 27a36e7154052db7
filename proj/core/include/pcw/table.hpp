#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcw/kit.hpp"
#include "pcw/syntax.hpp"

namespace pcw {

// A finite partial map with an optional value for every unlisted argument.
template <class E>
class OracleTable {
public:
    OracleTable() = default;
    OracleTable(std::initializer_list<std::pair<E, E>> entries) {
        for (const auto& [k, v] : entries) set(k, v);
    }

    void set(const E& key, const E& value) {
        if (auto it = index_.find(key); it != index_.end()) {
            entries_[it->second].second = value;
            return;
        }
        index_.emplace(key, entries_.size());
        entries_.emplace_back(key, value);
    }
    void set_default(std::optional<E> v) { default_ = std::move(v); }

    std::optional<E> lookup(const E& key) const {
        if (auto it = index_.find(key); it != index_.end()) return entries_[it->second].second;
        return default_;
    }
    bool has_key(const E& key) const { return index_.count(key) != 0; }
    const std::vector<std::pair<E, E>>& entries() const { return entries_; }
    const std::optional<E>& default_value() const { return default_; }
    std::size_t size() const { return entries_.size(); }

    bool operator==(const OracleTable& o) const {
        if (entries_.size() != o.entries_.size() || default_.has_value() != o.default_.has_value()) return false;
        if (default_ && !(*default_ == *o.default_)) return false;
        for (const auto& [k, v] : entries_) {
            auto w = o.index_.find(k);
            if (w == o.index_.end() || !(o.entries_[w->second].second == v)) return false;
        }
        return true;
    }

private:
    std::vector<std::pair<E, E>> entries_;
    std::unordered_map<E, std::size_t> index_;
    std::optional<E> default_;
};

struct TableFormatError : std::runtime_error {
    int line;
    TableFormatError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

namespace table_detail {

inline bool is_comment_or_blank(std::string_view line) {
    std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string_view::npos) return true;
    if (line[p] != '#') return false;
    return p + 1 >= line.size() || line[p + 1] == ' ' || line[p + 1] == '\t' || line[p + 1] == '#' ||
           line[p + 1] == '\r';
}

// Drops a trailing "  # remark" that is separated from the mapping by whitespace.
inline std::string_view strip_remark(std::string_view line) {
    for (std::size_t p = 1; p + 1 < line.size(); ++p)
        if (line[p] == '#' && (line[p - 1] == ' ' || line[p - 1] == '\t') && (line[p + 1] == ' ' || line[p + 1] == '\t'))
            return line.substr(0, p);
    if (!line.empty() && line.back() == '#' && line.size() > 1 && (line[line.size() - 2] == ' '))
        return line.substr(0, line.size() - 1);
    return line;
}

}  // namespace table_detail

// One mapping per line, `<key> -> <value>`; an optional `default -> <value>`; lines whose
// first token is `#` followed by a space are comments.
template <class E>
OracleTable<E> parse_table(std::string_view text, const Env<E>& env,
                           const std::function<E(const Term<E>&)>& close) {
    OracleTable<E> t;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (table_detail::is_comment_or_blank(line)) {
            if (end == text.size()) break;
            continue;
        }
        line = table_detail::strip_remark(line);
        std::size_t arrow = line.find("->");
        if (arrow == std::string_view::npos) throw TableFormatError("expected '<key> -> <value>'", line_no);
        std::string_view lhs = line.substr(0, arrow);
        std::string_view rhs = line.substr(arrow + 2);
        auto trim = [](std::string_view s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string_view::npos ? std::string_view{} : s.substr(b, e - b + 1);
        };
        lhs = trim(lhs);
        rhs = trim(rhs);
        try {
            E value = close(parse(rhs, env));
            if (lhs == "default") {
                if (t.default_value()) throw TableFormatError("duplicate default", line_no);
                t.set_default(value);
            } else {
                E key = close(parse(lhs, env));
                if (t.has_key(key)) throw TableFormatError("duplicate key", line_no);
                t.set(key, value);
            }
        } catch (const ParseError& e) {
            throw TableFormatError(e.what(), line_no);
        } catch (const TermError& e) {
            throw TableFormatError(e.what(), line_no);
        }
        if (end == text.size()) break;
    }
    return t;
}

template <class E>
std::string print_table(const OracleTable<E>& t, const std::function<std::string(const E&)>& print) {
    std::string out;
    for (const auto& [k, v] : t.entries()) out += print(k) + " -> " + print(v) + "\n";
    if (t.default_value()) out += "default -> " + print(*t.default_value()) + "\n";
    return out;
}

struct NotANumeral : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <PcaModel M>
void add_table_combinators(Kit<M>& kit) {
    kit.program("loop", "#z (\\f x. f x)");
    kit.program("tlook",
                "#z (\\f j m n d. if #zero m then d n else "
                "if #eq n (#p0 (#p0 j)) then #p1 (#p0 j) else f (#p1 j) (#pred m) n d)");
}

// r with r·k̄ = t(k)‾ for listed keys, the default elsewhere, and divergence when there is
// no default. The table is stored as a list of pairs scanned by numeral equality.
template <PcaModel M>
ElementOf<M> table_to_code(const OracleTable<ElementOf<M>>& t, const Kit<M>& kit) {
    using E = ElementOf<M>;
    if (!kit.has("tlook")) throw KitMissing("table combinators are not installed in this kit");
    std::vector<E> pairs;
    Fuel fuel(10000000);
    for (const auto& [k, v] : t.entries()) {
        if (!kit.numeral_value(k) || !kit.numeral_value(v)) throw NotANumeral("table_to_code needs numeral entries");
        auto pr = apply2(kit.model(), kit.p(), k, v, fuel);
        if (!pr.is_defined()) throw KitMissing("pair construction out of fuel");
        pairs.push_back(pr.value());
    }
    E fallback;
    if (t.default_value()) {
        if (!kit.numeral_value(*t.default_value())) throw NotANumeral("table_to_code needs a numeral default");
        auto kd = kit.model().apply(kit.get("k"), *t.default_value(), fuel);
        fallback = kd.value();
    } else {
        fallback = kit.get("loop");
    }
    E list = kit.seq_code(pairs);
    auto jl = kit.model().apply(kit.p1(), list, fuel);
    using T = Term<E>;
    T body = T::app(T::app(T::app(T::app(T::constant(kit.get("tlook")), T::constant(jl.value())),
                                  T::constant(kit.numeral(pairs.size()))),
                           T::var("n")),
                    T::constant(fallback));
    return compile(body, {"n"}, kit.model(), kit.basis());
}

}  // namespace pcw
