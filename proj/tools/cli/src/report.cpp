#include "hdeg/cli/report.hpp"

#include <map>
#include <memory>

#include "hdeg/parse.hpp"
#include "hdeg/verify.hpp"

namespace hdeg::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> strings(const IdealGens& I) {
  std::vector<std::string> v;
  for (const auto& g : I) v.push_back(g.to_string());
  return v;
}

struct Algebra {
  RingPtr ring;
  IdealGens J;
  Presentation A;
};

/// Replays declarations and runs checks.
class Runner {
 public:
  explicit Runner(const SessionConfig& cfg) : cfg_(cfg) {}

  Report run(const InputScript& script) {
    Report out = Report::array();
    int command = 0;
    for (std::size_t k = 0; k < script.statements.size(); ++k) {
      const Statement& st = script.statements[k];
      if (const auto* c = std::get_if<CheckCmd>(&st)) {
        ++command;
        std::string ctx = "command " + std::to_string(command) + " (check " + c->what + " on " + current_.name + ")";
        guarded(ctx, [&] { out.push_back(check(*c)); });
      } else {
        guarded("statement " + std::to_string(k + 1), [&] { std::visit([this](const auto& d) { declare(d); }, st); });
      }
    }
    return out;
  }

 private:
  template <class F>
  static void guarded(const std::string& ctx, F&& f) {
    try {
      f();
    } catch (const CapExceeded& e) {
      throw CapExceeded(ctx + ": " + e.what());
    } catch (const EngineError& e) {
      throw EngineError(ctx + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError(ctx + ": " + e.what());
    }
  }

  Polynomial leaf(const RingPtr& ring, const std::string& text) const { return parse_polynomial(ring, text); }

  IdealGens eval(const IdealExpr& e, const RingPtr& ring) const {
    using K = IdealExpr::Kind;
    auto F = make_free_module(ring, {0});
    auto as_ideal = [](const SubmoduleGens& g) {
      IdealGens out;
      for (const auto& x : g.gens) out.push_back(x.component(0));
      return out;
    };
    auto times = [&](const IdealGens& a, const IdealGens& b) {
      IdealGens prod;
      for (const auto& f : a)
        for (const auto& g : b) prod.push_back(f * g);
      if (prod.empty()) return prod;
      return as_ideal(minimal_generators(ideal_as_submodule(prod, F), cfg_.limits));
    };
    switch (e.kind) {
      case K::poly: {
        Polynomial p = leaf(ring, e.text);
        return p.is_zero() ? IdealGens{} : IdealGens{p};
      }
      case K::name:
        return ideals_.at(e.text);
      case K::list: {
        IdealGens out;
        for (const auto& a : e.args)
          for (auto& g : eval(a, ring)) out.push_back(std::move(g));
        return out;
      }
      case K::intersect:
        return as_ideal(intersect(ideal_as_submodule(eval(e.args[0], ring), F), ideal_as_submodule(eval(e.args[1], ring), F),
                                  cfg_.limits));
      case K::product:
        return times(eval(e.args[0], ring), eval(e.args[1], ring));
      case K::power: {
        IdealGens base = eval(e.args[0], ring);
        IdealGens acc{Polynomial::constant(ring, 1)};
        for (int i = 0; i < e.exponent; ++i) acc = times(acc, base);
        return acc;
      }
    }
    return {};
  }

  void declare(const RingDecl& r) {
    Field k = cfg_.field ? *cfg_.field : (r.characteristic ? Field::prime(r.characteristic) : Field::rationals());
    rings_[r.name] = make_ring(k, r.vars);
    current_ring_ = r.name;
  }

  void declare(const IdealDecl& d) { ideals_[d.name] = eval(d.expr, rings_.at(d.ring)); }

  void declare(const AlgebraDecl& a) {
    const RingPtr& ring = rings_.at(a.ring);
    IdealGens J = eval(a.ideal, ring);
    Presentation A = Presentation::quotient_ring(ring, J, cfg_.limits);
    algebras_[a.name] = {ring, J, A};
    current_ring_ = a.ring;
    set_module(a.name, ring, J, A);
  }

  void declare(const ModuleDecl& m) {
    const Algebra& alg = algebras_.at(m.algebra);
    const int rank = static_cast<int>(m.matrix.size());
    std::vector<int> tw = m.twists.empty() ? std::vector<int>(rank, 0) : m.twists;
    auto F = make_free_module(alg.ring, tw);
    std::vector<FreeElement> rels;
    const std::size_t cols = rank ? m.matrix.front().size() : 0;
    for (std::size_t j = 0; j < cols; ++j) {
      FreeElement col(F);
      for (int i = 0; i < rank; ++i) col = col + FreeElement::from_polynomial(F, i, leaf(alg.ring, m.matrix[i][j]));
      if (!col.is_zero()) rels.push_back(col);
    }
    for (auto& g : ideal_times_module(alg.J, F).gens) rels.push_back(std::move(g));
    set_module(m.name, alg.ring, alg.J, Presentation(F, rels, cfg_.limits));
  }

  void declare(const ParamsDecl& p) {
    const RingPtr& ring = rings_.at(p.ring);
    params_.clear();
    for (const auto& g : p.gens) params_.push_back(leaf(ring, g));
    have_params_ = true;
  }

  void declare(const ExampleDecl& e) {
    Field k = cfg_.field ? *cfg_.field : Field::rationals();
    ProblemInstance P = e.family == "ex39" ? gen_example_39(e.args[0].second, e.args[1].second, k, cfg_.limits)
                                           : gen_example_46(e.args[0].second, k, cfg_.limits);
    current_ = std::move(P);
    params_ = current_.params;
    have_params_ = true;
    session_ = std::make_shared<InvariantSession>(cfg_.limits, cfg_.window);
  }

  void declare(const CheckCmd&) {}

  void set_module(const std::string& name, const RingPtr& ring, const IdealGens& J, Presentation M) {
    current_ = ProblemInstance{};
    current_.name = name;
    current_.family = "custom";
    current_.ring = ring;
    current_.defining_ideal = J;
    current_.module = std::move(M);
    session_ = std::make_shared<InvariantSession>(cfg_.limits, cfg_.window);
  }

  Json check(const CheckCmd& c) {
    ProblemInstance P = current_;
    const bool with_params = have_params_;
    P.params = with_params ? params_ : maximal_ideal(P.ring);
    InvariantSession& s = *session_;

    Json j;
    j["command"] = c.what;
    j["instance"] = P.name;
    j["ideal"] = strings(P.params);
    std::vector<std::string> witnesses;

    const InvariantReport r = s.report(P.module, P.params);
    j["dimension"] = r.dim;
    j["depth"] = r.depth;
    j["multiplicity"] = r.e.e[0];
    j["colength"] = r.length_mod_I;
    j["hilbert_coefficients"] = r.e.e;
    j["postulation"] = r.e.postulation;
    j["hdeg"] = r.hdeg;
    j["torsions"] = r.torsions;
    j["chi1"] = r.chi1 ? Json(*r.chi1) : Json(nullptr);
    j["h0_length"] = r.h0_length;
    j["dual_dims"] = r.dual_dims;

    Json flags;
    flags["cohen_macaulay"] = r.cohen_macaulay;
    flags["generalized_cm"] = r.generalized_cm;
    flags["unmixed"] = r.unmixed;
    flags["sv_invariant"] = r.sv_invariant ? Json(*r.sv_invariant) : Json(nullptr);
    if (with_params) {
      DSequenceResult d = s.is_d_sequence(P.params, P.module);
      flags["d_sequence"] = d.holds;
      if (!d.holds)
        witnesses.push_back("d-sequence fails at (i,j)=(" + std::to_string(d.i) + "," + std::to_string(d.j) + ")");
    } else {
      flags["d_sequence"] = nullptr;
    }
    j["flags"] = flags;

    j["thm1"] = nullptr;
    j["thm2"] = nullptr;
    j["audit"] = nullptr;
    if (c.what == "thm1" || c.what == "thm2") {
      TheoremVerdict v = c.what == "thm1" ? check_thm1(P, s, cfg_.seed) : check_thm2(P, s, cfg_.seed);
      j[c.what] = verdict_json(v);
      for (auto& w : v.witnesses) witnesses.push_back(std::move(w));
    } else if (c.what == "audit") {
      AuditReport a = audit_inequalities(P, s);
      Json checks = Json::array();
      for (const auto& x : a.checks) {
        checks.push_back({{"name", x.name}, {"lhs", x.lhs}, {"relation", x.relation}, {"rhs", x.rhs}, {"pass", x.pass}});
        if (!x.pass) witnesses.push_back("audit violation: " + x.name + " (" + std::to_string(x.lhs) + " vs " + std::to_string(x.rhs) + ")");
      }
      j["audit"] = {{"all_pass", a.all_pass()}, {"checks", checks}};
    }
    j["witnesses"] = witnesses;
    return j;
  }

  static Json verdict_json(const TheoremVerdict& v) {
    Json t;
    if (v.unmixed) t["unmixed"] = *v.unmixed;
    t["condition1"] = v.condition1;
    if (v.condition2) t["condition2"] = *v.condition2;
    t["condition2a"] = v.condition2a;
    t["condition2b"] = v.condition2b;
    t["equivalence_checked"] = v.equivalence_checked;
    t["equivalence_consistent"] = v.equivalence_consistent;
    const Consequences& c = v.consequences;
    Json q;
    q["evaluated"] = c.evaluated;
    if (c.evaluated) {
      q["d_sequence"] = c.dseq_status;
      q["generators"] = strings(c.dseq_generators);
      q["qm_cap_h0_zero"] = c.qm_cap_h0_zero;
      q["q_kills_duals"] = c.q_kills_duals;
      if (v.theorem == "thm2") {
        q["torsion_identities"] = c.torsion_identities;
        q["top_coefficient_zero"] = c.top_coefficient_zero;
        q["polynomial_exact"] = c.polynomial_exact;
      }
    }
    t["consequences"] = q;
    t["sound"] = v.sound();
    return t;
  }

  const SessionConfig& cfg_;
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, IdealGens> ideals_;
  std::map<std::string, Algebra> algebras_;
  std::string current_ring_;
  ProblemInstance current_;
  IdealGens params_;
  bool have_params_ = false;
  std::shared_ptr<InvariantSession> session_;
};

void render(const Json& v, const std::string& indent, std::string& out);

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool flat(const Json& v) {
  if (v.is_object()) return false;
  if (v.is_array())
    for (const auto& x : v)
      if (x.is_object() || x.is_array() || x.is_string()) return false;
  return true;
}

void render(const Json& v, const std::string& indent, std::string& out) {
  std::size_t width = 0;
  for (const auto& [k, x] : v.items()) width = std::max(width, k.size());
  for (const auto& [k, x] : v.items()) {
    std::string key = indent + k + std::string(width - k.size() + 2, ' ');
    if (flat(x)) {
      out += key + scalar_text(x) + "\n";
    } else if (x.is_object()) {
      out += indent + k + "\n";
      render(x, indent + "  ", out);
    } else if (x.empty()) {
      out += key + "[]\n";
    } else if (x.front().is_object()) {
      out += indent + k + "\n";
      for (const auto& row : x) {
        std::string line;
        for (const auto& [rk, rv] : row.items()) line += (line.empty() ? "" : "  ") + scalar_text(rv);
        out += indent + "  " + line + "\n";
      }
    } else if (k == "witnesses") {
      out += indent + k + "\n";
      for (const auto& w : x) out += indent + "  - " + scalar_text(w) + "\n";
    } else {
      out += key + scalar_text(x) + "\n";
    }
  }
}

}  // namespace

Field parse_field_spec(const std::string& spec) {
  if (spec == "qq" || spec == "QQ") return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad field '" + spec + "': expected qq or fp:P");
    unsigned long long p = std::stoull(digits);
    if (p >= (1ull << 31)) throw InputError("field characteristic " + digits + " is not a prime below 2^31");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("bad field '" + spec + "': expected qq or fp:P");
}

Report run_command(const InputScript& script, const SessionConfig& cfg) { return Runner(cfg).run(script); }

std::string emit_report(const Report& r, Format format) {
  if (format == Format::json) return r.dump(2) + "\n";
  std::string out;
  for (const auto& cmd : r) {
    out += "== check " + cmd.value("command", std::string()) + " on " + cmd.value("instance", std::string()) + "\n";
    Json body = Json::object();
    for (const auto& [k, v] : cmd.items())
      if (k != "command" && k != "instance" && !v.is_null()) body[k] = v;
    render(body, "  ", out);
  }
  if (r.empty()) out = "no checks\n";
  return out;
}

bool has_violation(const Report& r) {
  for (const auto& cmd : r) {
    for (const char* t : {"thm1", "thm2"})
      if (cmd.contains(t) && cmd[t].is_object() && !cmd[t].value("sound", true)) return true;
    if (cmd.contains("audit") && cmd["audit"].is_object() && !cmd["audit"].value("all_pass", true)) return true;
  }
  return false;
}

}  // namespace hdeg::cli
