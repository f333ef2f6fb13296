#include "hs3/measure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "hs3/errors.hpp"

namespace hs3 {

PsiTable::PsiTable(int dhat) : dhat_(dhat) {
  if (dhat < 3 || dhat > 6) throw InputError("dhat must lie in [3,6], got " + std::to_string(dhat));
}

void PsiTable::set(int m, int c, double value) {
  if (m < 0 || m > kPsiRows || c < 0 || c > m)
    throw InputError("cell (" + std::to_string(m) + "," + std::to_string(c) + ") is outside the table");
  cells_[m][c] = value;
}

PsiTable PsiTable::bundled_psi4() {
  static const std::vector<std::vector<double>> rows = {
      {0.244},
      {0.5154, 0.4706},
      {0.6842, 0.6842, 0.6733},
      {0.8441, 0.8898, 0.9087, 0.8742},
      {1.0444, 1.0444, 1.0444, 1.0444, 1.0597},
      {1.2109, 1.2108, 1.2108, 1.2109, 1.214, 1.2088},
      {1.3151, 1.315, 1.315, 1.315, 1.3152, 1.316, 1.3129},
      {1.3666, 1.3666, 1.3666, 1.3666, 1.3666, 1.3666, 1.3666, 1.3666},
  };
  PsiTable t(4);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) t.set(static_cast<int>(i + 1), static_cast<int>(j + 1), rows[i][j]);
  return t;
}

double psi(const PsiTable& t, int m, int c) {
  if (m < 0 || c < 0) throw InputError("psi arguments must be non-negative");
  if (c == 0) return 0.0;
  if (m > kPsiRows) return t.cell(kPsiRows, 1);
  if (c > m) return 0.0;
  return t.cell(m, c);
}

std::vector<int> RangeWithDefault::expand() const {
  if (lo > hi) return {fallback};
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

double psi_star(const PsiTable& t, int m) {
  double best = std::numeric_limits<double>::infinity();
  for (int c : RangeWithDefault{1, m, 0}.expand()) best = std::min(best, psi(t, m, c));
  return best;
}

double delta(const PsiTable& t, int m, int alpha, int c, int cp) {
  return psi(t, m, c) - psi(t, std::max(0, m - alpha), cp);
}

double mu(const PsiTable& t, const Instance& inst) {
  const auto s = two_section(inst.graph);
  return static_cast<double>(inst.k) - psi(t, static_cast<int>(s.m2), static_cast<int>(s.c2));
}

int dhat(const Hypergraph& g) { return static_cast<int>(std::clamp<std::size_t>(max_degree(g), 3, 6)); }

double branching_number(std::span<const double> v) {
  if (v.empty()) throw InputError("empty branching vector");
  for (double a : v)
    if (!(a > 0.0)) throw InputError("branching vector entry " + std::to_string(a) + " is not positive");
  if (v.size() == 1) return 1.0;
  auto f = [&](double x) {
    double s = -1.0;
    for (double a : v) s += std::pow(x, -a);
    return s;
  };
  double lo = 1.0, hi = 64.0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() > b.size()) return false;
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (sa[i] < sb[i]) return false;
  return true;
}

namespace {

using Sink = std::vector<FamilyVector>;
using Generator = std::function<void(const PsiTable&, int m, const EnumerationLimits&, Sink&)>;

struct FamilyDef {
  FamilyInfo info;
  Generator gen;
};

std::vector<int> capped(int lo, int hi, int fallback, const EnumerationLimits& lim) {
  if (lo > hi) return {fallback};
  return RangeWithDefault{lo, std::min(hi, lim.c_cap), fallback}.expand();
}

std::string fmt_params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

FamilyDef ranged(std::string name, RuleId rule, int m_lo, int alpha_max, Generator gen) {
  return {{std::move(name), rule, true, m_lo, kPsiRows + std::max(0, alpha_max) + 1}, std::move(gen)};
}

FamilyDef fixed(std::string name, RuleId rule, std::vector<BranchingVector> vectors) {
  return {{name, rule, false, 0, 0},
          [name, vectors = std::move(vectors)](const PsiTable&, int, const EnumerationLimits&, Sink& out) {
            for (std::size_t i = 0; i < vectors.size(); ++i) out.push_back({name, "i=" + std::to_string(i), vectors[i]});
          }};
}

BranchingVector cat(BranchingVector a, const BranchingVector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<FamilyDef> b1_families() {
  return {ranged("B1", RuleId::B1, 4, 4, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    for (int c : capped(2, m - 3, 1, lim)) {
      const double a = 2 - delta(t, m, 4, c, c - 1);
      out.push_back({"B1", fmt_params({{"m", m}, {"c", c}}), {a, a}});
    }
  })};
}

std::vector<FamilyDef> b2_families() {
  std::vector<FamilyDef> f;
  f.push_back(ranged("B2.d2=2", RuleId::B2, 2, 2, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    for (int c : capped(2, m - 1, 1, lim))
      for (int cp : capped(1, m - 1, 0, lim))
        out.push_back({"B2.d2=2", fmt_params({{"m", m}, {"c", c}, {"c'", cp}}),
                       {1 - delta(t, m, 1, c, cp), 2 - delta(t, m, 2, c, c - 1)}});
  }));
  f.push_back(ranged("B2.d2=2.wide", RuleId::B2, 2, 5, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    for (int c : capped(1, m - 1, 0, lim))
      for (int cp : capped(1, m - 5, 0, lim))
        for (int cpp : capped(1, m - 4, 0, lim))
          out.push_back({"B2.d2=2.wide", fmt_params({{"m", m}, {"c", c}, {"c'", cp}, {"c''", cpp}}),
                         {2 - delta(t, m, 5, c, cp), 2 - delta(t, m, 4, c, cpp)}});
  }));
  f.push_back(ranged("B2.d2=1", RuleId::B2, 1, -1, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    for (int cp : capped(1, m + 1, 0, lim))
      out.push_back({"B2.d2=1", fmt_params({{"m", m}, {"c'", cp}}), {1 - delta(t, m, -1, m, cp), 1}});
  }));
  f.push_back(ranged("B2.d2=1.wide", RuleId::B2, 1, 3, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    for (int cp : capped(1, m - 3, 0, lim))
      for (int cpp : capped(1, m, 0, lim))
        out.push_back({"B2.d2=1.wide", fmt_params({{"m", m}, {"c'", cp}, {"c''", cpp}}),
                       {2 - delta(t, m, 3, m, cp), 1 - delta(t, m, 0, m, cpp)}});
  }));
  return f;
}

std::vector<FamilyDef> b3_families(int dh, const EnumerationLimits& lim) {
  std::vector<FamilyDef> f;
  f.push_back(ranged("B3.d2=1", RuleId::B3, 1, 1, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    for (int cp : capped(1, m + 1, 0, lim))
      out.push_back({"B3.d2=1", fmt_params({{"m", m}, {"c'", cp}}),
                     {1 - delta(t, m, 1, m, m - 1), 1 - delta(t, m, -1, m, cp)}});
  }));
  f.push_back(ranged("B3.d2=1.d3>=3", RuleId::B3, 1, 1, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    for (int cp : capped(1, m + 2, 0, lim))
      out.push_back({"B3.d2=1.d3>=3", fmt_params({{"m", m}, {"c'", cp}}),
                     {1 - delta(t, m, 1, m, m - 1), 1 - delta(t, m, -2, m, cp)}});
  }));
  f.push_back(ranged("B3.d2=2", RuleId::B3, 2, 3, [](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
    if (m == 4) {
      for (int c = 1; c <= 3; ++c)
        for (int cp = 1; cp <= 2; ++cp)
          for (int cpp = 1; cpp <= 2; ++cpp)
            out.push_back({"B3.d2=2", fmt_params({{"m", 4}, {"c", c}, {"c'", cp}, {"c''", cpp}}),
                           {1 - delta(t, 4, 2, c, cp), 2 - delta(t, 4, 2, c, cpp)}});
      return;
    }
    const int alpha = std::min(m, 4) - 1;
    for (int c : capped(1, m - 1, 0, lim))
      for (int cp : capped(1, m - 2, 0, lim))
        for (int cpp : capped(1, m - 3, 1, lim))
          out.push_back({"B3.d2=2", fmt_params({{"m", m}, {"c", c}, {"c'", cp}, {"c''", cpp}}),
                         {1 - delta(t, m, 2, c, cp), 2 - delta(t, m, alpha, c, cpp)}});
  }));
  // d2(v) <= d(v) <= d(G), so below dhat = 6 the degree is bounded by dhat itself.
  const int d_hi = dh < 6 ? dh : lim.d_max;
  for (int d = 3; d <= d_hi; ++d) {
    const std::string name = "B3.d2=" + std::to_string(d);
    f.push_back(ranged(name, RuleId::B3, d, d * d, [d, name](const PsiTable& t, int m, const EnumerationLimits& lim, Sink& out) {
      const int a2 = std::min(m, d * d);
      for (int c : capped(1, m - d + 1, 0, lim))
        for (int cp : capped(1, m - d, 0, lim))
          for (int cpp : capped(1, m - a2, 0, lim))
            out.push_back({name, fmt_params({{"m", m}, {"d", d}, {"c", c}, {"c'", cp}, {"c''", cpp}}),
                           {1 - delta(t, m, d, c, cp), d - delta(t, m, a2, c, cpp)}});
    }));
  }
  return f;
}

std::vector<BranchingVector> b6_vectors(const PsiTable& t) {
  return {{1 + psi_star(t, 5), psi(t, 2, 2)},
          {1 + psi_star(t, 4), std::min(2.0, psi(t, 4, 2))},
          {1 + psi_star(t, 4), 1 + psi_star(t, 3), 1 + psi(t, 2, 2)},
          {1 + psi_star(t, 4), 2, 1 + psi_star(t, 2)},
          {std::min(3.0, 2 + psi(t, 1, 1)), psi(t, 2, 2)}};
}

/// Prefixes for a branch whose first child lands in a B4/B5/B6 situation one unit deeper.
std::vector<BranchingVector> shifted_prefixes(const PsiTable& t) {
  const double p11 = psi(t, 1, 1), p22 = psi(t, 2, 2);
  return {{2 + p11, 2 + p11, 4},
          {2 + psi_star(t, 4), 3, 3},
          {2 + psi_star(t, 5), 1 + p22},
          {2 + psi_star(t, 4), std::min(2.0, 1 + psi(t, 4, 2))},
          {2 + psi_star(t, 4), 2 + psi_star(t, 3), 2 + p22},
          {2 + psi_star(t, 4), 3, 2 + psi_star(t, 2)},
          {std::min(4.0, 3 + p11), 1 + p22}};
}

std::vector<FamilyDef> b8_families(const PsiTable& t) {
  const int dh = t.dhat();
  std::vector<FamilyDef> f;
  if (dh == 3) return f;
  if (dh == 6) {
    f.push_back(fixed("B8", RuleId::B8, {{1, psi_star(t, 6)}}));
    return f;
  }
  const int d = dh;
  const auto P = [&](int m, int c) { return psi(t, m, c); };
  const auto S = [&](int m) { return psi_star(t, m); };
  f.push_back(fixed("B8.general", RuleId::B8,
                    {{1, 1},
                     {1, S(d + 1)},
                     {1, 2, 2},
                     {1, 1 + S(d - 1), 2 + S(d - 2)},
                     {1, 2, 2 + S(d - 4)},
                     {1, 1 + S(d + 1), 1 + P(d, d)},
                     {1, 2 + S(d - 3), 1 + S(d)}}));
  if (d == 5) {
    f.push_back(fixed("B8.d=5", RuleId::B8,
                      {{1, 1 + P(4, 4), 1 + S(6)},
                       {1, 1 + S(3), 2 + S(2)},
                       {1, 1 + S(2), 3},
                       {1, 1 + S(1), 4}}));
    return f;
  }
  const BranchingVector tail1 = {1 + P(3, 3), 1 + S(5)};
  std::vector<BranchingVector> d4 = {{1, 1 + P(3, 3), 1 + S(6)}, cat({2}, tail1), cat({1 + S(2)}, tail1)};
  for (const auto& p : shifted_prefixes(t)) d4.push_back(cat(p, tail1));
  f.push_back(fixed("B8.d=4", RuleId::B8, std::move(d4)));

  const BranchingVector tail2 = {1 + S(2), 2 + S(2)};
  std::vector<BranchingVector> d4p2 = {{2, 1 + S(2), 1 + S(2)}, {1 + P(1, 1), 1 + S(2), 2 + S(2)}};
  for (const auto& p : shifted_prefixes(t)) d4p2.push_back(cat(p, tail2));
  f.push_back(fixed("B8.d=4.d'=2", RuleId::B8, std::move(d4p2)));
  return f;
}

std::vector<FamilyDef> families(const PsiTable& t, RuleId rule, const EnumerationLimits& lim) {
  const int dh = t.dhat();
  switch (rule) {
    case RuleId::B1:
      return b1_families();
    case RuleId::B2:
      return b2_families();
    case RuleId::B3:
      return b3_families(dh, lim);
    case RuleId::B4:
      if (dh != 4) return {};
      return {fixed("B4", RuleId::B4, {{1 + psi(t, 1, 1), 1 + psi(t, 1, 1), 3}})};
    case RuleId::B5:
      if (dh > 4) return {};
      return {fixed("B5", RuleId::B5, {{1 + psi_star(t, 4), 2, 2}})};
    case RuleId::B6:
      if (dh > 4) return {};
      return {fixed("B6", RuleId::B6, b6_vectors(t))};
    case RuleId::B8:
      return b8_families(t);
    default:
      return {};
  }
}

}  // namespace

std::vector<FamilyInfo> list_families(const PsiTable& t, RuleId rule, const EnumerationLimits& lim) {
  std::vector<FamilyInfo> out;
  for (const auto& f : families(t, rule, lim)) out.push_back(f.info);
  return out;
}

std::vector<FamilyVector> enumerate_family(const PsiTable& t, const FamilyInfo& family, int m,
                                           const EnumerationLimits& lim) {
  for (const auto& f : families(t, family.rule, lim))
    if (f.info.name == family.name) {
      Sink out;
      f.gen(t, m, lim, out);
      return out;
    }
  throw InputError("no family named " + family.name + " for rule " + std::string(rule_name(family.rule)));
}

std::vector<FamilyVector> enumerate_vectors(const PsiTable& t, RuleId rule, const EnumerationLimits& lim) {
  Sink out;
  for (const auto& f : families(t, rule, lim)) {
    if (!f.info.has_m) {
      f.gen(t, 0, lim, out);
      continue;
    }
    for (int m = f.info.m_lo; m <= f.info.m_hi; ++m) f.gen(t, m, lim, out);
  }
  return out;
}

RuleVerification verify_rule(const PsiTable& t, RuleId rule, const EnumerationLimits& lim) {
  RuleVerification r;
  r.rule = rule;
  const auto vectors = enumerate_vectors(t, rule, lim);
  r.applicable = !vectors.empty();
  r.vector_count = vectors.size();
  for (const auto& v : vectors) {
    if (std::any_of(v.entries.begin(), v.entries.end(), [](double a) { return !(a > 0.0); })) {
      r.failures.push_back(v);
      continue;
    }
    const double bn = branching_number(v.entries);
    if (!r.argmax || bn > r.max_branching_number) {
      r.max_branching_number = bn;
      r.argmax = v;
    }
  }
  return r;
}

std::span<const RuleId> measured_rules() {
  static constexpr RuleId rules[] = {RuleId::B1, RuleId::B2, RuleId::B3, RuleId::B4,
                                     RuleId::B5, RuleId::B6, RuleId::B8};
  return rules;
}

PropertyReport check_properties(const PsiTable& t, double slack) {
  PropertyReport r;
  const int top = kPsiRows + 1;
  const double upper = t.dhat() == 6 ? 1.0 : 2.0;
  auto fail = [&](const char* p, int m, int c, int a, int cp, double v) { r.violations.push_back({p, m, c, a, cp, v}); };

  for (int m = 0; m <= top; ++m)
    for (int c = 0; c <= m; ++c) {
      ++r.checks;
      const double v = psi(t, m, c);
      if (v < -slack || v > upper + slack) fail("P1", m, c, 0, 0, v);
    }

  ++r.checks;
  if (std::abs(psi(t, 0, 0)) > slack) fail("P2", 0, 0, 0, 0, psi(t, 0, 0));

  for (int m = 1; m <= kPsiRows; ++m)
    for (int c = 1; c <= m; ++c)
      for (int cp = 1; cp <= m + 1; ++cp) {
        ++r.checks;
        const double gap = psi(t, m + 1, cp) - psi(t, m, c);
        if (gap < -slack) fail("P3", m, c, 1, cp, gap);
      }

  if (t.dhat() <= 5)
    for (int m = 1; m <= top; ++m)
      for (int a = 0; a <= std::min(t.dhat(), m); ++a)
        for (int c = 1; c <= m; ++c)
          for (int cp : RangeWithDefault{1, m - a, 0}.expand()) {
            ++r.checks;
            const double drop = psi(t, m, c) - psi(t, m - a, cp);
            if (drop > 1 + slack) fail("P4", m, c, a, cp, drop);
          }
  return r;
}

MonotonicityReport check_reduction_monotonicity(const PsiTable& t, std::span<const ReductionStep> trace,
                                                double slack) {
  MonotonicityReport r;
  for (const auto& s : trace) {
    if (static_cast<int>(s.dhat_before) != t.dhat()) continue;
    ++r.steps_checked;
    const double before = s.k_before - psi(t, static_cast<int>(s.m2_before), static_cast<int>(s.c2_before));
    const double after = s.k_after - psi(t, static_cast<int>(s.m2_after), static_cast<int>(s.c2_after));
    if (after > before + slack) r.violations.push_back(s);
  }
  return r;
}

namespace {

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

PsiTable parse_psi_table(std::string_view text) {
  std::optional<PsiTable> table;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const auto tok = split(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!table) {
      int d = 0;
      if (tok.size() != 2 || tok[0] != "psi" || !parse_number(tok[1], d)) throw ParseError(lineno, "expected header `psi <dhat>`");
      if (d < 3 || d > 6) throw ParseError(lineno, "dhat must lie in [3,6]");
      table.emplace(d);
      continue;
    }
    int m = 0, c = 0;
    double v = 0;
    if (tok.size() != 3 || !parse_number(tok[0], m) || !parse_number(tok[1], c) || !parse_number(tok[2], v))
      throw ParseError(lineno, "expected `m c value`");
    if (m < 0 || m > kPsiRows || c < 0 || c > m) throw ParseError(lineno, "cell outside 0 <= c <= m <= 8");
    table->set(m, c, v);
  }
  if (!table) throw ParseError(lineno, "missing header `psi <dhat>`");
  return *table;
}

std::string serialize_psi_table(const PsiTable& t) {
  std::ostringstream os;
  os << "psi " << t.dhat() << '\n';
  for (int m = 1; m <= kPsiRows; ++m)
    for (int c = 1; c <= m; ++c) {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, t.cell(m, c));
      os << m << ' ' << c << ' ' << std::string_view(buf, res.ptr - buf) << '\n';
    }
  return os.str();
}

PsiTable read_psi_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_psi_table(ss.str());
}

}  // namespace hs3
