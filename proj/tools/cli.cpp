#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hesse_moore/ext.hpp"
#include "hesse_moore/heisenberg.hpp"
#include "hesse_moore/serialize.hpp"
#include "hesse_moore/verify.hpp"

namespace hesse_moore::cli {

namespace {

struct Args {
  std::uint64_t p = 0;
  std::uint64_t q = 13;
  std::optional<std::int64_t> lambda;
  std::string lambda_sign = "minus";
  std::string a, a2, b, x, C, m;
  std::int64_t n = 0;
  int d = 0, j = 1;
  bool timing = false;
  bool sequential = false;
};

// Thrown for unusable argument values detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Command {
public:
  explicit Command(Args& args) : args_(args) {}

  Modulus modulus() const {
    if (args_.p == 0)
      throw UsageError("--p is required");
    return Modulus(args_.p);
  }

  Triple triple(const std::string& text, const char* flag) const {
    if (text.empty())
      throw UsageError(std::string(flag) + " is required");
    return parse_triple(text, modulus());
  }

  Triple a() const { return triple(args_.a, "--a"); }

  // --lambda if given (sign convention applied), else the curve through --a.
  HesseCurve curve() const {
    Modulus m = modulus();
    if (args_.lambda) {
      Fp lambda(m, *args_.lambda);
      return HesseCurve(args_.lambda_sign == "plus" ? -lambda : lambda);
    }
    if (args_.a.empty())
      throw UsageError("give --lambda or --a to fix the curve");
    return HesseCurve::through(a());
  }

  ProjectivePoint point(const std::string& text, const char* flag) const {
    return ProjectivePoint(triple(text, flag));
  }

  FormMatrix matrix_arg() const {
    if (args_.C.empty())
      throw UsageError("--C is required");
    json j;
    try {
      j = json::parse(args_.C);
    } catch (const json::exception& e) {
      throw UsageError(std::string("--C is not JSON: ") + e.what());
    }
    return form_matrix_from_json(j, modulus(), 1);
  }

  std::vector<std::int64_t> shifts() const {
    if (args_.m.empty())
      throw UsageError("--m is required");
    return parse_int_list(args_.m);
  }

  const Args& args() const { return args_; }

private:
  Args& args_;
};

using Action = std::function<json(const Command&)>;

json factorization_json(const MatrixFactorization& f) {
  return {{"A", to_json(f.A())},
          {"B", to_json(f.B())},
          {"f", to_json(f.product())},
          {"lambda", f.cubic().lambda().value()},
          {"unit", f.unit().value()},
          {"certified", true}};
}

json ext_json(const ExtSpace& e) {
  json sol = json::array(), hom = json::array(), reps = json::array();
  for (const FormMatrix& c : e.solution_basis)
    sol.push_back(to_json(c));
  for (const FormMatrix& c : e.homotopy_basis)
    hom.push_back(to_json(c));
  for (const FormMatrix& c : e.representatives)
    reps.push_back(to_json(c));
  return {{"m", e.shift},
          {"dimension", e.quotient_dimension},
          {"solution_basis", sol},
          {"homotopy_basis", hom},
          {"representatives", reps}};
}

json invariants_json(const TraceInvariants& t) {
  return {{"t1", t.t1.value()}, {"t2", t.t2.value()}, {"t3", t.t3.value()}};
}

struct Leaf {
  CLI::App* app;
  Action action;
};

class Builder {
public:
  Builder(CLI::App& root, Args& args, std::vector<Leaf>& leaves)
      : root_(root), args_(args), leaves_(leaves) {}

  CLI::App* group(const std::string& name, const std::string& help) {
    CLI::App* g = root_.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  }

  // Leaf command with the listed options (by flag name).
  void leaf(CLI::App* group, const std::string& name, const std::string& help,
            std::initializer_list<const char*> options, Action action) {
    CLI::App* c = group->add_subcommand(name, help);
    for (std::string opt : options) {
      if (opt == "p")
        c->add_option("--p", args_.p, "prime modulus, p = 1 mod 6");
      else if (opt == "lambda") {
        c->add_option("--lambda", args_.lambda, "curve parameter");
        c->add_option("--lambda-sign", args_.lambda_sign,
                      "minus: x0^3+x1^3+x2^3-lambda*x0*x1*x2, plus: ...+lambda*x0*x1*x2")
            ->check(CLI::IsMember({"minus", "plus"}));
      } else if (opt == "a")
        c->add_option("--a", args_.a, "point or Moore parameter a0,a1,a2");
      else if (opt == "a2")
        c->add_option("--a2", args_.a2, "second Moore parameter");
      else if (opt == "b")
        c->add_option("--b", args_.b, "specialization point b0,b1,b2");
      else if (opt == "x")
        c->add_option("--x", args_.x, "point x0,x1,x2");
      else if (opt == "n")
        c->add_option("--n", args_.n, "integer multiplier or group order");
      else if (opt == "d")
        c->add_option("--d", args_.d, "divisor of n");
      else if (opt == "j")
        c->add_option("--j", args_.j, "character index");
      else if (opt == "m")
        c->add_option("--m", args_.m, "comma-separated shifts, e.g. -1,0,1");
      else if (opt == "C")
        c->add_option("--C", args_.C, "JSON array of rows of forms, e.g. [[\"x0\",\"0\",...],...]");
      else if (opt == "q")
        c->add_option("--q", args_.q, "prime for sampled checks");
      else if (opt == "sequential")
        c->add_flag("--sequential", args_.sequential, "run criteria one at a time");
    }
    c->add_flag("--timing", args_.timing, "add elapsed milliseconds to the output");
    leaves_.push_back({c, std::move(action)});
  }

private:
  CLI::App& root_;
  Args& args_;
  std::vector<Leaf>& leaves_;
};

void build_hesse(Builder& b, CLI::App* g) {
  b.leaf(g, "points", "list E(F_p)", {"p", "lambda", "a"}, [](const Command& c) {
    HesseCurve e = c.curve();
    return json{{"curve", to_json(e)}, {"count", e.points().size()}, {"points", to_json(e.points())}};
  });
  b.leaf(g, "add", "x + a", {"p", "lambda", "a", "x"}, [](const Command& c) {
    HesseCurve e = c.curve();
    ProjectivePoint x = c.point(c.args().x, "--x"), a = c.point(c.args().a, "--a");
    return json{{"curve", to_json(e)}, {"x", to_json(x)}, {"a", to_json(a)}, {"sum", to_json(e.add(x, a))}};
  });
  b.leaf(g, "sub", "x - a", {"p", "lambda", "a", "x"}, [](const Command& c) {
    HesseCurve e = c.curve();
    ProjectivePoint x = c.point(c.args().x, "--x"), a = c.point(c.args().a, "--a");
    return json{{"curve", to_json(e)}, {"x", to_json(x)}, {"a", to_json(a)},
                {"difference", to_json(e.sub(x, a))}};
  });
  b.leaf(g, "double", "2a", {"p", "lambda", "a"}, [](const Command& c) {
    HesseCurve e = c.curve();
    ProjectivePoint a = c.point(c.args().a, "--a");
    return json{{"curve", to_json(e)}, {"a", to_json(a)}, {"double", to_json(e.double_point(a))}};
  });
  b.leaf(g, "triple", "3a", {"p", "lambda", "a"}, [](const Command& c) {
    HesseCurve e = c.curve();
    ProjectivePoint a = c.point(c.args().a, "--a");
    return json{{"curve", to_json(e)}, {"a", to_json(a)}, {"triple", to_json(e.triple_point(a))}};
  });
  b.leaf(g, "mul", "n a", {"p", "lambda", "a", "n"}, [](const Command& c) {
    HesseCurve e = c.curve();
    ProjectivePoint a = c.point(c.args().a, "--a");
    return json{{"curve", to_json(e)}, {"a", to_json(a)}, {"n", c.args().n},
                {"product", to_json(e.mul(c.args().n, a))}};
  });
  b.leaf(g, "torsion3", "E[3]", {"p", "lambda", "a"}, [](const Command& c) {
    HesseCurve e = c.curve();
    std::vector<ProjectivePoint> t = e.torsion3();
    std::sort(t.begin(), t.end());
    return json{{"curve", to_json(e)}, {"count", t.size()}, {"points", to_json(t)}};
  });
  b.leaf(g, "torsion6", "E[6] from the line arrangement", {"p", "lambda", "a"}, [](const Command& c) {
    HesseCurve e = c.curve();
    std::vector<ProjectivePoint> t = e.torsion6();
    std::sort(t.begin(), t.end());
    std::vector<ProjectivePoint> brute = e.torsion_brute_force(6);
    std::sort(brute.begin(), brute.end());
    return json{{"curve", to_json(e)},
                {"count", t.size()},
                {"points", to_json(t)},
                {"matches_brute_force", t == brute}};
  });
}

void build_moore(Builder& b, CLI::App* g) {
  b.leaf(g, "build", "M_{a,x}, or M_{a,b} with --b", {"p", "a", "b"}, [](const Command& c) {
    Triple a = c.a();
    if (c.args().b.empty())
      return json{{"a", to_json(a)}, {"matrix", to_json(moore(a))}};
    Matrix mb = moore_at(a, c.triple(c.args().b, "--b"));
    return json{{"a", to_json(a)}, {"matrix", to_json(mb)}, {"rank", mb.rank()}};
  });
  b.leaf(g, "det", "det M_{a,x}", {"p", "a"}, [](const Command& c) {
    Triple a = c.a();
    HomForm det = moore_det(a);
    return json{{"a", to_json(a)}, {"det", to_json(det)}, {"matches_expansion", moore(a).det3() == det}};
  });
  b.leaf(g, "adjugate", "adjugate of M_{a,x}, or of M_{a,b} with --b", {"p", "a", "b"},
         [](const Command& c) {
           Triple a = c.a();
           if (c.args().b.empty())
             return json{{"a", to_json(a)}, {"adjugate", to_json(moore_adjugate(a))}};
           return json{{"a", to_json(a)},
                       {"adjugate", to_json(moore_adjugate_at(a, c.triple(c.args().b, "--b")))}};
         });
  b.leaf(g, "kernel", "kernel points of M_{a,b}", {"p", "a", "b"}, [](const Command& c) {
    Matrix mb = moore_at(c.a(), c.triple(c.args().b, "--b"));
    return json{{"rank", mb.rank()},
                {"left", to_json(left_kernel_point(mb))},
                {"right", to_json(right_kernel_point(mb))}};
  });
}

void build_heis(Builder& b, CLI::App* g) {
  b.leaf(g, "orbit", "Heis_3 orbit of a", {"p", "a"}, [](const Command& c) {
    std::set<ProjectivePoint> o = orbit(c.a());
    return json{{"count", o.size()}, {"orbit", to_json(std::vector<ProjectivePoint>(o.begin(), o.end()))}};
  });
  b.leaf(g, "invariants", "trace invariants of M_{a,x}", {"p", "a"}, [](const Command& c) {
    return invariants_json(trace_invariants(c.a()));
  });
  b.leaf(g, "equiv", "equivalence of M_{a,x} and M_{a2,x}", {"p", "a", "a2"}, [](const Command& c) {
    Triple a = c.a(), a2 = c.triple(c.args().a2, "--a2");
    return json{{"equivalent", are_equivalent(a, a2)},
                {"invariants", json::array({invariants_json(trace_invariants(a)),
                                            invariants_json(trace_invariants(a2))})}};
  });
  b.leaf(g, "characters", "Schroedinger character chi_j of H_n", {"p", "n", "j"}, [](const Command& c) {
    Modulus m = c.modulus();
    int n = static_cast<int>(c.args().n);
    if (n < 1)
      throw UsageError("--n must be a positive group order");
    ClassFunction chi = schrodinger_character(m, n, c.args().j);
    json values = json::array();
    for (const Fp& v : chi.values())
      values.push_back(v.value());
    return json{{"n", n},
                {"j", c.args().j},
                {"zeta", primitive_root_of_unity(m, static_cast<std::uint64_t>(n)).value()},
                {"values", values},
                {"norm", inner_product(chi, chi).value()}};
  });
  b.leaf(g, "restrict", "restriction of chi_j from H_n to H_d", {"p", "n", "d", "j"},
         [](const Command& c) {
           return json{{"n", c.args().n}, {"d", c.args().d}, {"j", c.args().j},
                       {"holds", verify_restriction(c.modulus(), static_cast<int>(c.args().n),
                                                    c.args().d, c.args().j)}};
         });
  b.leaf(g, "tensor", "chi_1^2 = 3 chi_2 on H_3 and the tensor basis", {"p"}, [](const Command& c) {
    return json{{"holds", verify_tensor_h3(primitive_root_of_unity(c.modulus(), 3))}};
  });
}

void build_ulrich(Builder& b, CLI::App* g) {
  b.leaf(g, "rank1", "Moore factorization", {"p", "a"}, [](const Command& c) {
    MatrixFactorization f = moore_factorization(c.a());
    json out = factorization_json(f);
    out["divergence"] = divergence(coordinate_forms(c.modulus())).value();
    return out;
  });
  b.leaf(g, "rank2", "rank-2 block factorization", {"p", "a"}, [](const Command& c) {
    UlrichExtension u = rank2_ulrich(c.a());
    json out = factorization_json(u.factorization);
    out["b"] = to_json(u.b);
    out["C"] = to_json(u.datum.C);
    out["D"] = to_json(u.datum.D);
    out["divergence"] = u.divergence.value();
    return out;
  });
  b.leaf(g, "partner", "D = -BCB/f for an extension matrix C", {"p", "a", "C"}, [](const Command& c) {
    MatrixFactorization f = moore_factorization(c.a());
    ExtensionDatum e = extension_datum(f, c.matrix_arg());
    return json{{"C", to_json(e.C)}, {"D", to_json(e.D)}, {"m", e.shift}, {"identities", true}};
  });
  b.leaf(g, "trace", "trace criterion and BCB congruence for C", {"p", "a", "C"}, [](const Command& c) {
    MatrixFactorization f = moore_factorization(c.a());
    FormMatrix C = c.matrix_arg();
    return json{{"trace", to_json((f.B() * C).trace())},
                {"trace_criterion", trace_criterion(f, C)},
                {"bcb_divisible", bcb_divisible(f, C)},
                {"bcb_congruence", bcb_congruence(f, C)}};
  });
}

void build_ext(Builder& b, CLI::App* g) {
  b.leaf(g, "dims", "dim Ext^1(L, L(m))", {"p", "a", "m"}, [](const Command& c) {
    json dims = json::object();
    for (std::int64_t m : c.shifts())
      dims[std::to_string(m)] = ext_space(c.a(), static_cast<int>(m)).quotient_dimension;
    return dims;
  });
  b.leaf(g, "basis", "solution, homotopy and representative bases", {"p", "a", "m"},
         [](const Command& c) {
           std::vector<std::int64_t> ms = c.shifts();
           if (ms.size() != 1)
             throw UsageError("ext basis takes a single --m");
           return ext_json(ext_space(c.a(), static_cast<int>(ms[0])));
         });
  b.leaf(g, "class", "divergence class of C in Ext^1(L, L)", {"p", "a", "C"}, [](const Command& c) {
    MooreRepresentative r = moore_representative(c.a(), c.matrix_arg());
    if (!r.well_defined)
      throw InternalError("divergence depends on the chosen representative");
    return json{{"divergence", r.divergence.value()},
                {"y", json::array({to_json(r.y[0]), to_json(r.y[1]), to_json(r.y[2])})},
                {"U", to_json(r.U)},
                {"V", to_json(r.V)}};
  });
}

void build_verify(Builder& b, CLI::App* g) {
  b.leaf(g, "all", "acceptance suite; --p exhaustive prime, --q sampled prime", {"p", "q", "sequential"},
         [](const Command& c) {
           VerifyConfig cfg;
           cfg.seed = seed_from_environment();
           if (c.args().p)
             cfg.small_prime = Modulus(c.args().p).value();
           cfg.large_prime = Modulus(c.args().q).value();
           cfg.parallel = !c.args().sequential;
           json criteria = json::array();
           std::size_t passed = 0;
           for (const CriterionResult& r : run_acceptance(cfg)) {
             json entry = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
             if (c.args().timing)
               entry["timing_ms"] = r.milliseconds;
             criteria.push_back(entry);
             passed += r.passed;
           }
           return json{{"criteria", criteria},
                       {"passed", passed},
                       {"failed", criteria.size() - passed},
                       {"seed", cfg.seed},
                       {"p", cfg.small_prime},
                       {"q", cfg.large_prime}};
         });
}

json status(const char* s) { return json{{"status", s}}; }

} // namespace

CommandResult run(const std::vector<std::string>& args) {
  Args parsed;
  std::vector<Leaf> leaves;
  CLI::App app{"Moore matrices and Hesse cubics over F_p", "hesse-moore"};
  app.require_subcommand(1);
  Builder b(app, parsed, leaves);
  build_hesse(b, b.group("hesse", "group law and torsion on Hesse cubics"));
  build_moore(b, b.group("moore", "Moore matrices"));
  build_heis(b, b.group("heis", "Heisenberg groups and characters"));
  build_ulrich(b, b.group("ulrich", "matrix factorizations"));
  build_ext(b, b.group("ext", "self-extensions of the Moore module"));
  build_verify(b, b.group("verify", "acceptance suite"));

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    err << e.what() << "\n" << app.help();
    result.err = err.str();
    result.exit_code = usage_error;
    return result;
  }

  const Leaf* chosen = nullptr;
  for (const Leaf& leaf : leaves)
    if (leaf.app->parsed())
      chosen = &leaf;
  if (!chosen) {
    result.err = app.help();
    result.exit_code = usage_error;
    return result;
  }

  Command command(parsed);
  json out;
  auto start = std::chrono::steady_clock::now();
  try {
    out = status("ok");
    out["result"] = chosen->action(command);
  } catch (const UsageError& e) {
    result.err = std::string(e.what()) + "\n" + chosen->app->help();
    result.exit_code = usage_error;
    return result;
  } catch (const std::exception& e) {
    out = status("error");
    out["error"] = e.what();
    result.exit_code = domain_error;
  }
  if (parsed.timing)
    out["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  result.out = out.dump() + "\n";
  return result;
}

} // namespace hesse_moore::cli
