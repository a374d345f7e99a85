#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfsurg/arith.hpp"
#include "hfsurg/cfk.hpp"
#include "hfsurg/cone.hpp"
#include "hfsurg/contact.hpp"
#include "hfsurg/hkm.hpp"
#include "hfsurg/invariants.hpp"
#include "hfsurg/io.hpp"

using nlohmann::ordered_json;
using namespace hfsurg;

namespace {

ordered_json rat_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}}; }

std::vector<long long> parse_coeff_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in coefficient list");
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"surgery-formula toolkit for knot complexes over F2"};
  app.require_subcommand(1);

  std::string file;
  long long tb = 0, rot = 0, x = 1, y = 1, p = 0, q = 1, qq = 1, rr = 0;
  int window = 0;
  bool use_mirror = false;
  std::string coeffs;

  auto* c_validate = app.add_subcommand("validate", "structural checks on a complex");
  c_validate->add_option("file", file, "complex JSON file")->required();

  auto* c_inv = app.add_subcommand("invariants", "tau, nu, epsilon of a complex");
  c_inv->add_option("file", file, "complex JSON file")->required();

  auto* c_cone = app.add_subcommand("cone", "homology of the truncated surgery cone");
  c_cone->add_option("file", file, "complex JSON file")->required();
  c_cone->add_option("--p", p, "surgery numerator")->required();
  c_cone->add_option("--q", q, "surgery denominator (>= 1)")->required();
  c_cone->add_option("--window", window, "truncation window (0 = automatic)");
  c_cone->add_flag("--mirror", use_mirror, "use the mirror of the complex");

  auto* c_contact = app.add_subcommand("contact", "contact invariant of rational contact surgery");
  c_contact->add_option("file", file, "complex JSON file")->required();
  c_contact->add_option("--tb", tb, "Thurston-Bennequin number")->required();
  c_contact->add_option("--rot", rot, "rotation number")->required();
  c_contact->add_option("--x", x, "contact coefficient numerator")->required();
  c_contact->add_option("--y", y, "contact coefficient denominator")->required();

  auto* c_dgs = app.add_subcommand("dgs", "reduction of rational contact surgery to +-1 surgeries");
  c_dgs->add_option("--tb", tb, "Thurston-Bennequin number")->required();
  c_dgs->add_option("--rot", rot, "rotation number")->required();
  c_dgs->add_option("--x", x, "contact coefficient numerator")->required();
  c_dgs->add_option("--y", y, "contact coefficient denominator")->required();

  auto* c_dinv = app.add_subcommand("dinv", "d-invariants of a lens space");
  c_dinv->add_option("--q", qq, "order of H1")->required();
  c_dinv->add_option("--r", rr, "lens parameter")->required();

  auto* c_hkm = app.add_subcommand("hkm", "exhaustive generator-class check");
  c_hkm->add_option("--coeffs", coeffs, "comma-separated list, all >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  ordered_json out;
  if (*c_validate) {
    KnotComplex c = load_knot_complex(file);  // load already validates
    Diagnostics d = validate(c);
    out = {{"name", c.name}, {"ok", d.ok}, {"issues", d.issues}};
  } else if (*c_inv) {
    KnotComplex c = load_knot_complex(file);
    InvariantReport r = invariants(c);
    out = {{"name", c.name}, {"tau", r.tau}, {"nu", r.nu}, {"epsilon", r.epsilon}, {"width", r.width}};
  } else if (*c_cone) {
    KnotComplex c = load_knot_complex(file);
    if (use_mirror) c = mirror(c);
    SurgerySlope s{p, q};
    ConeComplex cone = build_cone(c, s, window);
    auto dims = cone_homology(cone);
    ordered_json hom = ordered_json::object();
    long long total = 0;
    for (auto& [res, dim] : dims) {
      hom[std::to_string(res)] = dim;
      total += dim;
    }
    out = {{"name", c.name},
           {"p", s.p},
           {"q", s.q},
           {"window", cone.window},
           {"homology", hom},
           {"total", total}};
  } else if (*c_contact) {
    KnotComplex c = load_knot_complex(file);
    ContactReport r = contact_report(c, {tb, rot}, x, y);
    out = {{"name", c.name},
           {"tb", tb},
           {"rot", rot},
           {"contact_coeff", {{"num", x}, {"den", y}}},
           {"surgery", {{"p", r.surgery.p}, {"q", r.surgery.q}}},
           {"k", r.k},
           {"tau", r.tau},
           {"epsilon", r.epsilon},
           {"decided_nonzero", r.decided_nonzero},
           {"computed_nonzero", r.computed_nonzero},
           {"agree", r.agree}};
    if (!r.agree) {
      std::cout << out.dump(2) << "\n";
      std::cerr << "error: closed-form verdict and cone computation disagree\n";
      return 3;
    }
  } else if (*c_dgs) {
    DgsPlan plan = dgs_plan({tb, rot}, x, y);
    ordered_json link = ordered_json::array();
    for (auto& comp : plan.link)
      link.push_back({{"index", comp.index},
                      {"contact_coeff", comp.contact_coeff},
                      {"stabilizations", comp.stabilizations},
                      {"rotation", comp.rotation}});
    out = {{"tb", tb},
           {"rot", rot},
           {"contact_coeff", {{"num", x}, {"den", y}}},
           {"cf", plan.cf},
           {"link", link},
           {"linking_matrix", plan.linking_matrix},
           {"chern_on_surface", plan.chern_on_S}};
  } else if (*c_dinv) {
    auto d = lens_d_invariants(qq, rr);
    ordered_json vals = ordered_json::array();
    for (auto& v : d) vals.push_back(rat_json(v));
    out = {{"q", qq}, {"r", rr}, {"d", vals}};
  } else if (*c_hkm) {
    HkmVerdict v = verify_hkm_strong(parse_coeff_list(coeffs));
    out = {{"coeffs", parse_coeff_list(coeffs)},
           {"x_sequence", v.xs},
           {"checked", v.checked},
           {"strong", v.strong}};
    if (v.counterexample) out["counterexample"] = *v.counterexample;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NotChainMap& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidComplex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
