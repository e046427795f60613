#include <algorithm>
#include <cstdint>
#include <deque>

#include "diagcalc/presentation.hpp"

namespace diagcalc {

namespace {

using Node = std::int32_t;
constexpr Node kNone = -1;

using Letters = std::vector<int>;

// Right Cayley graph under construction. Dead nodes forward to the node they
// were merged into; table entries are resolved lazily.
class CosetTable {
 public:
  CosetTable(int letters, std::size_t budget) : letters_(letters), budget_(budget) {}

  bool exhausted() const noexcept { return exhausted_; }
  std::size_t defined() const noexcept { return parent_.size(); }
  std::size_t live() const noexcept { return live_; }

  Node add() {
    if (parent_.size() >= budget_) {
      exhausted_ = true;
      return kNone;
    }
    const auto id = static_cast<Node>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + static_cast<std::size_t>(letters_), kNone);
    ++live_;
    return id;
  }

  Node find(Node x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  bool alive(Node x) const { return parent_[static_cast<std::size_t>(x)] == x; }

  Node edge(Node x, int l) {
    Node& e = slot(x, l);
    if (e != kNone) e = find(e);
    return e;
  }

  // Follows w from x, creating missing edges; kNone once the budget runs out.
  Node walk_defining(Node x, const Letters& w) {
    for (int l : w) {
      Node next = edge(x, l);
      if (next == kNone) {
        next = add();
        if (next == kNone) return kNone;
        slot(x, l) = next;
      }
      x = next;
    }
    return x;
  }

  // Follows w from x without creating edges. Returns the end node, or the
  // node reached before the first missing edge together with its position.
  std::pair<Node, std::size_t> walk(Node x, const Letters& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Node next = edge(x, w[i]);
      if (next == kNone) return {x, i};
      x = next;
    }
    return {x, w.size()};
  }

  void set_edge(Node x, int l, Node y) { slot(x, l) = y; }

  // Identifies a and b and everything that follows; the smaller index survives.
  void coincide(Node a, Node b) {
    pending_.emplace_back(a, b);
    while (!pending_.empty()) {
      auto [x, y] = pending_.front();
      pending_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent_[static_cast<std::size_t>(y)] = x;
      --live_;
      for (int l = 0; l < letters_; ++l) {
        Node ty = slot(y, l);
        if (ty == kNone) continue;
        ty = find(ty);
        Node& tx = slot(x, l);
        if (tx == kNone) {
          tx = ty;
        } else {
          pending_.emplace_back(find(tx), ty);
        }
      }
    }
  }

 private:
  Node& slot(Node x, int l) { return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(l)]; }

  int letters_;
  std::size_t budget_;
  bool exhausted_ = false;
  std::size_t live_ = 0;
  std::vector<Node> parent_;
  std::vector<Node> table_;
  std::deque<std::pair<Node, Node>> pending_;
};

struct Rule {
  Letters lhs;
  Letters rhs;
};

// Traces every relation from every live node without defining anything:
// complete traces with different ends coincide, and a trace missing only
// its last edge is completed from the other side. Returns whether anything
// changed.
bool lookahead(CosetTable& t, const std::vector<Rule>& rules) {
  bool changed = false;
  for (Node x = 0; static_cast<std::size_t>(x) < t.defined(); ++x) {
    for (const auto& r : rules) {
      if (!t.alive(x)) break;
      auto [lend, lpos] = t.walk(x, r.lhs);
      auto [rend, rpos] = t.walk(x, r.rhs);
      const bool lfull = lpos == r.lhs.size(), rfull = rpos == r.rhs.size();
      if (lfull && rfull) {
        if (t.find(lend) != t.find(rend)) {
          t.coincide(lend, rend);
          changed = true;
        }
      } else if (lfull && rpos + 1 == r.rhs.size()) {
        t.set_edge(rend, r.rhs.back(), t.find(lend));
        changed = true;
      } else if (rfull && lpos + 1 == r.lhs.size()) {
        t.set_edge(lend, r.lhs.back(), t.find(rend));
        changed = true;
      }
    }
  }
  return changed;
}

// Every relation holds at every live node and every edge is defined.
bool consistent(CosetTable& t, const std::vector<Rule>& rules, int letters) {
  for (Node x = 0; static_cast<std::size_t>(x) < t.defined(); ++x) {
    if (!t.alive(x)) continue;
    for (int l = 0; l < letters; ++l) {
      if (t.edge(x, l) == kNone) return false;
    }
    for (const auto& r : rules) {
      if (t.walk(x, r.lhs).first != t.walk(x, r.rhs).first) return false;
    }
  }
  return true;
}

}  // namespace

EnumerationResult enumerate_presented(const Presentation& p, std::size_t budget) {
  EnumerationResult result;
  const int letters = static_cast<int>(p.alphabet.size());
  std::vector<Rule> rules;
  for (const auto& r : p.relations) {
    Rule rule;
    for (const auto& x : r.lhs) rule.lhs.push_back(static_cast<int>(*p.letter(x)));
    for (const auto& x : r.rhs) rule.rhs.push_back(static_cast<int>(*p.letter(x)));
    rules.push_back(std::move(rule));
  }

  CosetTable t(letters, std::max<std::size_t>(budget, 1));
  t.add();
  std::size_t next_lookahead = 100'000;

  for (;;) {
    for (Node x = 0; static_cast<std::size_t>(x) < t.defined(); ++x) {
      for (const auto& r : rules) {
        if (!t.alive(x)) break;
        const Node a = t.walk_defining(x, r.lhs);
        const Node b = a == kNone ? kNone : t.walk_defining(x, r.rhs);
        if (b == kNone) break;
        t.coincide(a, b);
      }
      for (int l = 0; l < letters && t.alive(x) && !t.exhausted(); ++l) {
        if (t.edge(x, l) == kNone) t.walk_defining(x, {l});
      }
      if (t.exhausted()) {
        result.nodes_used = t.defined();
        return result;
      }
      if (t.live() > next_lookahead) {
        while (lookahead(t, rules)) {
        }
        next_lookahead = std::max(next_lookahead, 2 * t.live());
      }
    }
    if (consistent(t, rules, letters)) break;
  }

  // Number the elements breadth-first so that words come out shortlex.
  const bool semigroup = p.kind == MonoidKind::semigroup;
  std::vector<std::int64_t> number(t.defined(), -1);
  std::vector<Node> order;
  std::vector<std::pair<std::int64_t, int>> via;  // parent element and letter
  auto visit = [&](Node y, std::int64_t parent, int l) {
    y = t.find(y);
    if (number[static_cast<std::size_t>(y)] >= 0) return;
    number[static_cast<std::size_t>(y)] = static_cast<std::int64_t>(order.size());
    order.push_back(y);
    via.emplace_back(parent, l);
  };
  if (semigroup) {
    for (int l = 0; l < letters; ++l) visit(t.edge(0, l), -1, l);
  } else {
    visit(0, -1, -1);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int l = 0; l < letters; ++l) visit(t.edge(order[k], l), static_cast<std::int64_t>(k), l);
  }

  result.status = EnumerationResult::Status::completed;
  result.size = order.size();
  result.nodes_used = t.defined();
  result.table.reserve(order.size() * static_cast<std::size_t>(letters));
  for (Node y : order) {
    for (int l = 0; l < letters; ++l) result.table.push_back(static_cast<std::uint32_t>(number[static_cast<std::size_t>(t.edge(y, l))]));
  }
  result.words.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto [parent, l] = via[k];
    if (parent >= 0) result.words[k] = result.words[static_cast<std::size_t>(parent)];
    if (l >= 0) result.words[k].push_back(p.alphabet[static_cast<std::size_t>(l)]);
  }
  return result;
}

}  // namespace diagcalc
