// Command-line front end: counting queries and verification sweeps over the
// level-set / filtration machinery, reported as text, JSON or CSV.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <permcount/permcount.hpp>

namespace pc = permcount;

namespace {

std::string format = "text";
int workers = 0;
double time_budget = 0.0;

int emit(pc::Report& rep, std::chrono::steady_clock::time_point t0) {
  rep.elapsed_ms = pc::detail::ms_since(t0);
  std::cout << pc::render(rep, format);
  return rep.exit_code();
}

std::vector<int> parse_type(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    std::istringstream ts(tok);
    int v;
    while (ts >> v) parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty cycle type");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("cycle type parts must be positive");
    n += p;
  }
  if (n > pc::max_degree) throw std::invalid_argument("cycle type degree exceeds 16");
  return parts;
}

std::string type_label(const std::vector<int>& type) {
  std::string s;
  for (std::size_t t = 0; t < type.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(type[t]);
  }
  return s;
}

pc::Perm parse_tau(const std::string& s, int m) {
  if (s.empty() || s == "id") return pc::Perm::identity(m);
  return pc::parse_perm(s, m);
}

std::string tau_label(const pc::Perm& tau) {
  return tau.is_identity() ? std::string("id") : pc::to_cycle_string(tau);
}

int run_levelset(int n, int i, bool list) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n < 1 || n > pc::max_degree) throw std::invalid_argument("n out of range (1..16)");
  if (i < 0 || i >= n) throw std::invalid_argument("i out of range (0..n-1)");
  pc::Report rep;
  rep.command = "levelset";
  rep.query["n"] = n;
  rep.query["i"] = i;
  pc::Check c;
  c.name = "levelset";
  c.params = "n=" + std::to_string(n) + " i=" + std::to_string(i);
  const auto ct0 = std::chrono::steady_clock::now();
  c.counts.emplace_back("levelset(" + std::to_string(n) + "," + std::to_string(i) + ")",
                        pc::level_set_size(n, i));
  if (list)
    pc::for_each_in_level_set(n, i, [&](const pc::Perm& p) { c.elements.push_back(pc::to_cycle_string(p)); });
  c.elapsed_ms = pc::detail::ms_since(ct0);
  rep.checks.push_back(std::move(c));
  return emit(rep, t0);
}

int run_class(const std::string& type_str, bool list) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto type = parse_type(type_str);
  const std::string label = type_label(type);
  pc::Report rep;
  rep.command = "class";
  rep.query["type"] = label;
  pc::Check c;
  c.name = "class";
  c.params = "type=" + label;
  const auto ct0 = std::chrono::steady_clock::now();
  c.counts.emplace_back("class(" + label + ")", pc::class_size(type));
  if (list) pc::for_each_in_class(type, [&](const pc::Perm& p) { c.elements.push_back(pc::to_cycle_string(p)); });
  c.elapsed_ms = pc::detail::ms_since(ct0);
  rep.checks.push_back(std::move(c));
  return emit(rep, t0);
}

int run_count_f(int m, int k, int i, int j, const std::string& tau_str, const std::string& method) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto order = pc::default_order(m);
  const pc::Perm tau = parse_tau(tau_str, m);
  const pc::FQuery q{m, k, i, j, tau};
  pc::check_f_query(q, order);
  if (i < 0 || i >= m || j < 0 || j >= m) throw std::invalid_argument("i,j out of range (0..m-1)");

  pc::Report rep;
  rep.command = "count-f";
  rep.query["m"] = m;
  rep.query["k"] = k;
  rep.query["i"] = i;
  rep.query["j"] = j;
  rep.query["tau"] = tau_label(tau);
  rep.order_name = order.name;
  rep.method = method;

  const std::string key = "F" + std::to_string(k) + "(" + std::to_string(i) + "," +
                          std::to_string(j) + "," + tau_label(tau) + ")";
  pc::Check c;
  c.name = "count-f";
  c.params = "m=" + std::to_string(m);
  const auto ct0 = std::chrono::steady_clock::now();
  if (method == "brute") {
    c.counts.emplace_back(key, pc::count_F_brute(q, order, workers));
  } else if (method == "recursion") {
    c.counts.emplace_back(key, pc::count_F_recursive(q, order));
  } else {  // both
    const pc::u64 b = pc::count_F_brute(q, order, workers);
    const pc::u64 r = pc::count_F_recursive(q, order);
    c.counts.emplace_back("brute:" + key, b);
    c.counts.emplace_back("recursion:" + key, r);
    c.verified = b == r;
    if (b != r) c.counterexamples.push_back(key + ": brute=" + std::to_string(b) + " recursive=" + std::to_string(r));
  }
  c.elapsed_ms = pc::detail::ms_since(ct0);
  rep.checks.push_back(std::move(c));
  return emit(rep, t0);
}

int run_count_g(int g, int i, int j, const std::string& variant, const std::string& method) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = pc::g_degree(g);
  if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("i,j out of range (0..n-1)");
  const pc::GVariant v = variant == "all" ? pc::GVariant::all : pc::GVariant::strict;
  const pc::GQuery q{g, i, j, v};
  const char* base = v == pc::GVariant::all ? "G_all" : "G";
  const std::string key = std::string(base) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";

  pc::Report rep;
  rep.command = "count-g";
  rep.query["g"] = g;
  rep.query["i"] = i;
  rep.query["j"] = j;
  rep.query["variant"] = variant;

  pc::Check c;
  c.name = "count-g";
  c.params = "g=" + std::to_string(g) + " variant=" + variant;
  const auto ct0 = std::chrono::steady_clock::now();
  if (method == "both") {
    if (i + j - 2 != n - 2)
      throw std::invalid_argument("--method both needs i+j-2 = n-2 (no reduced count otherwise)");
    const pc::u64 b = pc::count_G_brute(q, workers);
    const pc::u64 r = pc::count_G_reduced(q, workers);
    c.counts.emplace_back("brute:" + key, b);
    c.counts.emplace_back("reduced:" + key, r);
    c.verified = b == r;
    if (b != r) c.counterexamples.push_back(key + ": brute=" + std::to_string(b) + " reduced=" + std::to_string(r));
    rep.method = "both";
  } else {
    const pc::GMethod mm = method == "brute" ? pc::GMethod::brute : pc::GMethod::reduced;
    const pc::GResult res = pc::count_G(q, mm, workers);
    c.counts.emplace_back(key, res.value);
    rep.method = res.method_used;
  }
  c.elapsed_ms = pc::detail::ms_since(ct0);
  rep.checks.push_back(std::move(c));
  return emit(rep, t0);
}

int run_verify_lemma1(int m) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto order = pc::default_order(m);
  pc::Report rep;
  rep.command = "verify lemma1";
  rep.query["m"] = m;
  rep.order_name = order.name;
  rep.checks.push_back(pc::verify_lemma1(m, order, workers));
  return emit(rep, t0);
}

int run_verify_lemma2(int g) {
  const auto t0 = std::chrono::steady_clock::now();
  pc::Report rep;
  rep.command = "verify lemma2";
  rep.query["g"] = g;
  for (pc::Check& c : pc::verify_lemma2(g, workers)) rep.checks.push_back(std::move(c));
  return emit(rep, t0);
}

int run_verify_recursion(int m, bool m_given) {
  const auto t0 = std::chrono::steady_clock::now();
  pc::Report rep;
  rep.command = "verify recursion";
  rep.order_name = "star-lex";
  const bool has_budget = time_budget > 0.0;
  const auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(time_budget));
  std::vector<int> ms;
  if (m_given) {
    rep.query["m"] = m;
    ms = {m};
  } else {
    rep.query["m_sweep"] = std::vector<int>{3, 4, 5};
    ms = {3, 4, 5};
  }
  for (int mm : ms) {
    if (has_budget && std::chrono::steady_clock::now() >= deadline) {
      pc::Check c;
      c.name = "recursion";
      c.params = "m=" + std::to_string(mm);
      c.skipped = "time budget exhausted";
      rep.checks.push_back(std::move(c));
      continue;
    }
    const auto order = pc::default_order(mm);
    rep.checks.push_back(pc::verify_recursion(mm, order, workers));
  }
  return emit(rep, t0);
}

int run_verify_covering(int g) {
  const auto t0 = std::chrono::steady_clock::now();
  pc::Report rep;
  rep.command = "verify covering";
  rep.query["g"] = g;
  rep.order_name = "star-lex";
  rep.checks.push_back(pc::verify_covering(g, workers));
  return emit(rep, t0);
}

int run_verify_oracles(int n) {
  const auto t0 = std::chrono::steady_clock::now();
  pc::Report rep;
  rep.command = "verify oracles";
  rep.query["n"] = n;
  for (pc::Check& c : pc::verify_oracles(n, workers)) rep.checks.push_back(std::move(c));
  return emit(rep, t0);
}

int run_verify_all(int g_max) {
  const auto t0 = std::chrono::steady_clock::now();
  pc::Report rep = pc::verify_all(g_max, workers, time_budget);
  return emit(rep, t0);
}

int run_diag(int g, const std::string& method) {
  const auto t0 = std::chrono::steady_clock::now();
  pc::Report rep;
  rep.command = "diag-coeff";
  rep.query["g"] = g;
  rep.method = method;
  rep.checks.push_back(pc::diag_coefficient(g, method, workers));
  return emit(rep, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counts of symmetric-group products by reflection length"};
  app.set_version_flag("--version", std::string(pc::tool_name) + " " + pc::tool_version);
  app.require_subcommand(1);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  workers = pc::default_workers();
  app.add_option("--workers", workers, "worker threads for the big scans");
  app.add_option("--time-budget", time_budget, "seconds before remaining checks are skipped");

  int n = 0, i = 0, j = 0, k = 0, m = 0, g = 0, g_max = 4, oracle_n = 8;
  bool list = false;
  std::string type_str, tau_str = "id", method_f = "brute", method_g = "reduced",
              method_d = "reduced", variant = "strict";

  auto* levelset = app.add_subcommand("levelset", "size (and members) of a reflection-length level set");
  levelset->add_option("--n", n, "degree")->required();
  levelset->add_option("--i", i, "reflection length")->required();
  levelset->add_flag("--list", list, "list the members");

  auto* cls = app.add_subcommand("class", "size (and members) of a conjugacy class");
  cls->add_option("--type", type_str, "cycle type, e.g. \"3,1\"")->required();
  cls->add_flag("--list", list, "list the members");

  auto* cf = app.add_subcommand("count-f", "filtration pair count F_k(i,j,tau)");
  cf->add_option("--m", m, "degree")->required();
  cf->add_option("--k", k, "filtration depth");
  cf->add_option("--i", i, "level of the first factor")->required();
  cf->add_option("--j", j, "level of the second factor")->required();
  cf->add_option("--tau", tau_str, "twist permutation (cycles or one-line; default id)");
  cf->add_option("--method", method_f, "brute | recursion | both")
      ->check(CLI::IsMember({"brute", "recursion", "both"}));

  auto* cg = app.add_subcommand("count-g", "marked-point product count G(i,j) in degree 2g-2");
  cg->add_option("--g", g, "size parameter g; the degree is 2g-2")->required();
  cg->add_option("--i", i, "level of the first factor")->required();
  cg->add_option("--j", j, "level of the second factor")->required();
  cg->add_option("--variant", variant, "strict | all")->check(CLI::IsMember({"strict", "all"}));
  cg->add_option("--method", method_g, "brute | reduced | both")
      ->check(CLI::IsMember({"brute", "reduced", "both"}));

  auto* verify = app.add_subcommand("verify", "run a verification battery");
  verify->require_subcommand(1);
  auto* v1 = verify->add_subcommand("lemma1", "monotonicity of F toward the diagonal");
  v1->add_option("--m", m, "degree")->required();
  auto* v2 = verify->add_subcommand("lemma2", "G(g-1,g-1) > G(g-2,g)");
  v2->add_option("--g", g, "size parameter g; the degree is 2g-2")->required();
  auto* vr = verify->add_subcommand("recursion", "three-term descent vs brute counts");
  auto* vr_m = vr->add_option("--m", m, "degree (default: sweep 3,4,5)");
  auto* vc = verify->add_subcommand("covering", "G_strict(i,j) = (2g-3) F_0(i-1,j-1,id)");
  vc->add_option("--g", g, "size parameter g; the degree is 2g-2")->required();
  auto* vo = verify->add_subcommand("oracles", "closed-form counts vs enumeration");
  vo->add_option("--n", oracle_n, "largest degree (default 8)");
  auto* va = verify->add_subcommand("all", "everything, g = 3..g-max");
  va->add_option("--g-max", g_max, "largest g to verify (default 4)");

  auto* dc = app.add_subcommand("diag-coeff", "N(i,j) = (2g-2) G(i,j) and Delta(g)");
  dc->add_option("--g", g, "size parameter g; the degree is 2g-2")->required();
  dc->add_option("--method", method_d, "reduced | brute | both")
      ->check(CLI::IsMember({"reduced", "brute", "both"}));

  // global flags remain usable after a subcommand name
  for (CLI::App* s : {levelset, cls, cf, cg, verify, v1, v2, vr, vc, vo, va, dc})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (workers < 1) workers = 1;

  try {
    if (*levelset) return run_levelset(n, i, list);
    if (*cls) return run_class(type_str, list);
    if (*cf) return run_count_f(m, k, i, j, tau_str, method_f);
    if (*cg) return run_count_g(g, i, j, variant, method_g);
    if (*v1) return run_verify_lemma1(m);
    if (*v2) return run_verify_lemma2(g);
    if (*vr) return run_verify_recursion(m, !vr_m->empty());
    if (*vc) return run_verify_covering(g);
    if (*vo) return run_verify_oracles(oracle_n);
    if (*va) return run_verify_all(g_max);
    if (*dc) return run_diag(g, method_d);
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
