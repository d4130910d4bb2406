#include "hopfit/symbolic.hpp"

#include <algorithm>
#include <cctype>

#include "hopfit/io.hpp"

namespace hopfit {

std::optional<Verdict> SymbolicMonoid::cohopfian_element_fact(
    const std::string&, const std::string&) const {
  return std::nullopt;
}

const DeclaredFact* SymbolicMonoid::fact(const std::string& name) const {
  for (const DeclaredFact& f : declared_facts()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

namespace {

void require_element(const SymbolicMonoid& s, const std::string& x) {
  if (!s.valid_element(x)) {
    throw ValidationError("'" + x + "' is not an element of " + s.name());
  }
}

// ---------------------------------------------------------------------------
// finite-table backend

class FiniteTableBackend final : public SymbolicMonoid {
 public:
  explicit FiniteTableBackend(MonoidPtr m) : m_(std::move(m)) {
    facts_.push_back({"finite", std::to_string(m_->size()) +
                                    "-element multiplication table; every "
                                    "search is exhaustive"});
    if (m_->is_commutative()) {
      facts_.push_back({"commutative", "verified over all pairs of the table"});
    }
  }

  std::string name() const override {
    return "finite:" + std::to_string(m_->size());
  }
  std::string identity() const override {
    return std::to_string(m_->identity());
  }
  bool valid_element(const std::string& x) const override {
    return parse(x).has_value();
  }
  std::string multiply(const std::string& x,
                       const std::string& y) const override {
    return std::to_string(m_->mul(*parse(x), *parse(y)));
  }
  int norm(const std::string& x) const override {
    return *parse(x) == m_->identity() ? 0 : 1;
  }
  std::vector<std::string> enumerate(int max_norm) const override {
    std::vector<std::string> out;
    out.push_back(identity());
    if (max_norm < 1) return out;
    for (int i = 0; i < m_->size(); ++i) {
      if (i != m_->identity()) out.push_back(std::to_string(i));
    }
    return out;
  }
  const std::vector<DeclaredFact>& declared_facts() const override {
    return facts_;
  }

  int element_count() const { return m_->size(); }

 private:
  std::optional<Element> parse(const std::string& x) const {
    if (x.empty() ||
        !std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(c); }))
      return std::nullopt;
    const long long v = std::stoll(x);
    if (v >= m_->size()) return std::nullopt;
    return static_cast<Element>(v);
  }

  MonoidPtr m_;
  std::vector<DeclaredFact> facts_;
};

// ---------------------------------------------------------------------------
// (N, +)

class NatAddBackend final : public SymbolicMonoid {
 public:
  NatAddBackend() {
    facts_ = {{"commutative", "m + n = n + m for naturals"},
              {"cancellative", "x + a = x + b implies a = b"},
              {"only-identity-right-invertible",
               "x + y = 0 over the naturals forces x = y = 0"}};
  }

  std::string name() const override { return "nat-add"; }
  std::string identity() const override { return "0"; }
  bool valid_element(const std::string& x) const override {
    return parse(x).has_value();
  }
  std::string multiply(const std::string& x,
                       const std::string& y) const override {
    return std::to_string(*parse(x) + *parse(y));
  }
  int norm(const std::string& x) const override {
    return static_cast<int>(std::min<long long>(*parse(x), 1 << 30));
  }
  std::vector<std::string> enumerate(int max_norm) const override {
    std::vector<std::string> out;
    for (int i = 0; i <= max_norm; ++i) out.push_back(std::to_string(i));
    return out;
  }
  const std::vector<DeclaredFact>& declared_facts() const override {
    return facts_;
  }

  std::optional<Verdict> cohopfian_element_fact(
      const std::string& z, const std::string& x) const override {
    const long long zv = *parse(z), xv = *parse(x);
    // n*x + z = (n+1)*x + t has the unique solution t = z - x for every n
    if (zv >= xv) {
      return Verdict::holds_with(
          Json{{"n", 1}, {"t", std::to_string(zv - xv)}},
          Json{{"rule", "additive: x^n z = x^(n+1) t solved by t = z - x"}});
    }
    return Verdict::fails(
        Json{{"z", z}, {"x", x}, {"impossible", "t = z - x < 0"}},
        Json{{"fact", "additive: t = z - x is forced and negative"}});
  }

 private:
  std::optional<long long> parse(const std::string& x) const {
    if (x.empty() ||
        !std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(c); }))
      return std::nullopt;
    if (x.size() > 1 && x[0] == '0') return std::nullopt;
    return std::stoll(x);
  }

  std::vector<DeclaredFact> facts_;
};

// ---------------------------------------------------------------------------
// free monoid on a finite alphabet; identity written "1"

class FreeBackend final : public SymbolicMonoid {
 public:
  explicit FreeBackend(int alphabet) : k_(alphabet) {
    if (k_ < 1 || k_ > 26) {
      throw ValidationError("free monoid alphabet size out of range [1, 26]");
    }
    facts_ = {{"cancellative", "words cancel: wu = wv implies u = v"},
              {"only-identity-right-invertible",
               "word lengths add; uv = 1 forces u = v = 1"}};
    if (k_ == 1) {
      facts_.push_back({"commutative", "one generator"});
    }
  }

  std::string name() const override { return "free:" + std::to_string(k_); }
  std::string identity() const override { return "1"; }
  bool valid_element(const std::string& x) const override {
    if (x == "1") return true;
    return !x.empty() && std::all_of(x.begin(), x.end(), [&](char c) {
      return c >= 'a' && c < 'a' + k_;
    });
  }
  std::string multiply(const std::string& x,
                       const std::string& y) const override {
    std::string out = (x == "1" ? "" : x) + (y == "1" ? "" : y);
    return out.empty() ? "1" : out;
  }
  int norm(const std::string& x) const override {
    return x == "1" ? 0 : static_cast<int>(x.size());
  }
  std::vector<std::string> enumerate(int max_norm) const override {
    std::vector<std::string> out{"1"};
    std::vector<std::string> layer{""};
    for (int len = 1; len <= max_norm; ++len) {
      std::vector<std::string> next;
      for (const std::string& w : layer) {
        for (char c = 'a'; c < 'a' + k_; ++c) {
          next.push_back(w + c);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }
  const std::vector<DeclaredFact>& declared_facts() const override {
    return facts_;
  }

  std::optional<Verdict> cohopfian_element_fact(
      const std::string& z, const std::string& x) const override {
    if (x == "1") {
      return Verdict::holds_with(Json{{"n", 1}, {"t", z}},
                                 Json{{"rule", "identity"}});
    }
    // cancel x^n on the left: x^n z = x^(n+1) t iff z = x t
    const std::string zz = (z == "1" ? "" : z);
    if (zz.size() >= x.size() && zz.compare(0, x.size(), x) == 0) {
      const std::string t = zz.substr(x.size());
      return Verdict::holds_with(
          Json{{"n", 1}, {"t", t.empty() ? "1" : t}},
          Json{{"rule", "left cancellation reduces to z = x t"}});
    }
    return Verdict::fails(
        Json{{"z", z}, {"x", x}, {"impossible", "x is not a prefix of z"}},
        Json{{"fact", "left cancellation reduces to z = x t"}});
  }

 private:
  int k_;
  std::vector<DeclaredFact> facts_;
};

// ---------------------------------------------------------------------------
// bicyclic monoid <b, c | bc = 1>, normal forms c^i b^j

struct CB {
  long long c, b;
};

class BicyclicBackend final : public SymbolicMonoid {
 public:
  std::string name() const override { return "bicyclic"; }
  std::string identity() const override { return "1"; }
  bool valid_element(const std::string& x) const override {
    return parse(x).has_value();
  }
  std::string multiply(const std::string& x,
                       const std::string& y) const override {
    const CB p = *parse(x), q = *parse(y);
    // (c^i b^j)(c^k b^l) = c^i b^(j-k+l) if j >= k, else c^(i+k-j) b^l
    if (p.b >= q.c) return render({p.c, p.b - q.c + q.b});
    return render({p.c + q.c - p.b, q.b});
  }
  int norm(const std::string& x) const override {
    const CB p = *parse(x);
    return static_cast<int>(p.c + p.b);
  }
  std::vector<std::string> enumerate(int max_norm) const override {
    std::vector<std::string> out;
    for (int total = 0; total <= max_norm; ++total) {
      for (int i = 0; i <= total; ++i) {
        out.push_back(render({i, total - i}));
      }
    }
    return out;
  }
  const std::vector<DeclaredFact>& declared_facts() const override {
    return facts_;
  }

 private:
  static std::string render(CB p) {
    if (p.c == 0 && p.b == 0) return "1";
    return std::string(p.c, 'c') + std::string(p.b, 'b');
  }
  std::optional<CB> parse(const std::string& x) const {
    if (x == "1") return CB{0, 0};
    if (x.empty()) return std::nullopt;
    std::size_t i = 0;
    while (i < x.size() && x[i] == 'c') ++i;
    std::size_t j = i;
    while (j < x.size() && x[j] == 'b') ++j;
    if (j != x.size()) return std::nullopt;
    return CB{static_cast<long long>(i), static_cast<long long>(j - i)};
  }

  std::vector<DeclaredFact> facts_;  // none declared
};

std::string power_of(const SymbolicMonoid& s, const std::string& x, int n) {
  std::string out = s.identity();
  for (int i = 0; i < n; ++i) out = s.multiply(out, x);
  return out;
}

}  // namespace

std::unique_ptr<SymbolicMonoid> finite_backend(MonoidPtr m) {
  return std::make_unique<FiniteTableBackend>(std::move(m));
}

std::unique_ptr<SymbolicMonoid> nat_add_backend() {
  return std::make_unique<NatAddBackend>();
}

std::unique_ptr<SymbolicMonoid> free_backend(int alphabet) {
  return std::make_unique<FreeBackend>(alphabet);
}

std::unique_ptr<SymbolicMonoid> bicyclic_backend() {
  return std::make_unique<BicyclicBackend>();
}

std::unique_ptr<SymbolicMonoid> make_backend(const std::string& spec) {
  if (spec == "nat-add") return nat_add_backend();
  if (spec == "bicyclic") return bicyclic_backend();
  if (spec.rfind("free:", 0) == 0) {
    return free_backend(std::stoi(spec.substr(5)));
  }
  if (spec.rfind("finite:", 0) == 0) {
    auto m = std::make_shared<const FiniteMonoid>(
        read_monoid(spec.substr(7)));
    return finite_backend(std::move(m));
  }
  throw ValidationError("unknown backend '" + spec +
                        "'; use finite:<file>, nat-add, free:<k>, bicyclic");
}

Verdict right_invertible(const SymbolicMonoid& s, const std::string& x,
                         const Budget& budget) {
  budget.check();
  require_element(s, x);
  const auto candidates = s.enumerate(budget.max_norm);
  for (const std::string& y : candidates) {
    if (s.multiply(x, y) == s.identity()) {
      return Verdict::holds_with(
          Json{{"y", y}}, Json{{"searched_up_to_norm", budget.max_norm}});
    }
  }
  if (s.fact("finite")) {
    return Verdict::fails(
        Json{{"x", x}, {"reason", "no right inverse among all elements"}},
        Json{{"fact", s.fact("finite")->justification},
             {"elements_searched", candidates.size()}});
  }
  if (const DeclaredFact* f = s.fact("only-identity-right-invertible")) {
    if (x != s.identity()) {
      return Verdict::fails(
          Json{{"x", x}, {"reason", "only the identity is right invertible"}},
          Json{{"fact", f->justification}});
    }
  }
  return Verdict::unknown(Json{{"searched_up_to_norm", budget.max_norm}});
}

Verdict left_cancellative(const SymbolicMonoid& s, const std::string& x,
                          const Budget& budget) {
  budget.check();
  require_element(s, x);
  const auto candidates = s.enumerate(budget.max_norm);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::string xa = s.multiply(x, candidates[i]);
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (xa == s.multiply(x, candidates[j])) {
        return Verdict::fails(Json{{"a", candidates[i]},
                                   {"b", candidates[j]},
                                   {"xa", xa}},
                              Json{{"searched_up_to_norm", budget.max_norm}});
      }
    }
  }
  if (x == s.identity()) {
    return Verdict::holds(Json{{"rule", "the identity is left cancellative"}});
  }
  if (s.fact("finite")) {
    return Verdict::holds(Json{{"exhaustive", true},
                               {"fact", s.fact("finite")->justification},
                               {"elements_searched", candidates.size()}});
  }
  if (const DeclaredFact* f = s.fact("cancellative")) {
    return Verdict::holds(Json{{"fact", f->justification}});
  }
  return Verdict::unknown(Json{{"searched_up_to_norm", budget.max_norm}});
}

Verdict monoid_right_hopfian(const SymbolicMonoid& s, const Budget& budget) {
  budget.check();
  for (const std::string& x : s.enumerate(budget.max_norm)) {
    const Verdict ri = right_invertible(s, x, budget);
    if (ri.status != Status::Holds) continue;
    const Verdict lc = left_cancellative(s, x, budget);
    if (lc.status == Status::Fails) {
      return Verdict::fails(Json{{"x", x},
                                 {"right_inverse", ri.witness["y"]},
                                 {"pair", lc.witness}},
                            Json{{"searched_up_to_norm", budget.max_norm}});
    }
  }
  if (const DeclaredFact* f = s.fact("commutative")) {
    return Verdict::holds(
        Json{{"rule", "commutative monoids are right hopfian"},
             {"fact", f->justification}});
  }
  if (const DeclaredFact* f = s.fact("only-identity-right-invertible")) {
    return Verdict::holds(
        Json{{"rule", "only the identity is right invertible, and the "
                      "identity is left cancellative"},
             {"fact", f->justification}});
  }
  if (const DeclaredFact* f = s.fact("finite")) {
    return Verdict::holds(Json{{"exhaustive", true}, {"fact", f->justification}});
  }
  return Verdict::unknown(Json{{"searched_up_to_norm", budget.max_norm}});
}

Verdict monoid_right_cohopfian(const SymbolicMonoid& s, const Budget& budget) {
  budget.check();
  for (const std::string& x : s.enumerate(budget.max_norm)) {
    const Verdict lc = left_cancellative(s, x, budget);
    if (lc.status != Status::Holds) continue;
    const Verdict ri = right_invertible(s, x, budget);
    if (ri.status == Status::Fails) {
      return Verdict::fails(Json{{"x", x},
                                 {"left_cancellative_via", lc.certificate},
                                 {"not_right_invertible", ri.witness}},
                            Json{{"searched_up_to_norm", budget.max_norm}});
    }
  }
  if (const DeclaredFact* f = s.fact("finite")) {
    return Verdict::holds(Json{{"exhaustive", true}, {"fact", f->justification}});
  }
  return Verdict::unknown(Json{{"searched_up_to_norm", budget.max_norm}});
}

Verdict strongly_hopfian_element(const SymbolicMonoid& s, const std::string& x,
                                 const Budget& budget) {
  budget.check();
  require_element(s, x);
  if (x == s.identity()) {
    return Verdict::holds(Json{{"rule", "identity element"}, {"n", 1}});
  }
  {
    const Verdict lc = left_cancellative(s, x, budget);
    if (lc.status == Status::Holds) {
      return Verdict::holds(
          Json{{"rule", "left cancellative: x^(n+1) s = x^(n+1) t implies "
                        "s = t"},
               {"n", 1},
               {"via", lc.certificate}});
    }
  }
  const bool finite = s.fact("finite") != nullptr;
  const auto candidates = s.enumerate(budget.max_norm);
  const long long elements = static_cast<long long>(candidates.size());
  Json violations = Json::array();
  bool all_violated = true;
  for (int n = 1; n <= budget.max_n; ++n) {
    const std::string xn = power_of(s, x, n);
    const std::string xn1 = s.multiply(xn, x);
    bool violated = false;
    for (std::size_t i = 0; i < candidates.size() && !violated; ++i) {
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        const std::string& cs = candidates[i];
        const std::string& ct = candidates[j];
        if (s.multiply(xn1, cs) == s.multiply(xn1, ct) &&
            s.multiply(xn, cs) != s.multiply(xn, ct)) {
          violations.push_back(Json{{"n", n}, {"s", cs}, {"t", ct}});
          violated = true;
          break;
        }
      }
    }
    if (!violated) {
      all_violated = false;
      if (finite) {
        return Verdict::holds(Json{{"n", n},
                                   {"exhaustive", true},
                                   {"fact", s.fact("finite")->justification}});
      }
    }
  }
  if (all_violated && (!finite || budget.max_n >= elements)) {
    return Verdict::fails(violations,
                          Json{{"max_n", budget.max_n},
                               {"searched_up_to_norm", budget.max_norm}});
  }
  return Verdict::unknown(Json{{"max_n", budget.max_n},
                               {"searched_up_to_norm", budget.max_norm},
                               {"violations_found", violations}});
}

Verdict strongly_cohopfian_element(const SymbolicMonoid& s,
                                   const std::string& z, const std::string& x,
                                   const Budget& budget) {
  budget.check();
  require_element(s, z);
  require_element(s, x);
  if (x == s.identity()) {
    return Verdict::holds_with(Json{{"n", 1}, {"t", z}},
                               Json{{"rule", "identity"}});
  }
  if (const auto fact_verdict = s.cohopfian_element_fact(z, x)) {
    return *fact_verdict;
  }
  const auto candidates = s.enumerate(budget.max_norm);
  std::string xn = x;
  for (int n = 1; n <= budget.max_n; ++n) {
    const std::string lhs = s.multiply(xn, z);
    const std::string xn1 = s.multiply(xn, x);
    for (const std::string& t : candidates) {
      if (s.multiply(xn1, t) == lhs) {
        return Verdict::holds_with(
            Json{{"n", n}, {"t", t}},
            Json{{"searched_up_to_norm", budget.max_norm}});
      }
    }
    xn = xn1;
  }
  if (s.fact("finite") &&
      budget.max_n >= static_cast<long long>(candidates.size())) {
    return Verdict::fails(
        Json{{"z", z},
             {"x", x},
             {"reason", "no (n, t) among all elements and n up to the "
                        "carrier bound"}},
        Json{{"fact", s.fact("finite")->justification},
             {"max_n", budget.max_n}});
  }
  return Verdict::unknown(Json{{"max_n", budget.max_n},
                               {"searched_up_to_norm", budget.max_norm}});
}

}  // namespace hopfit
