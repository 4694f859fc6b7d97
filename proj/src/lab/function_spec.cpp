#include "uplab/lab/function_spec.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uplab/fmodel/transforms.hpp"
#include "uplab/heisenberg/schrodinger.hpp"

namespace uplab::lab {

const std::vector<std::string>& function_variants() {
  static const std::vector<std::string> v{"gaussian", "hermite", "monomial", "ft-eigenfunction",
                                          "random", "random-phase", "poisson"};
  return v;
}

bool FunctionSpec::randomized() const {
  return variant == "ft-eigenfunction" || variant == "random" || variant == "random-phase" || variant == "poisson";
}

fmodel::TestFunction build_function(const FunctionSpec& spec, int n) {
  using namespace fmodel;
  if (n < 1) throw std::invalid_argument("function: dimension must be >= 1");
  const auto& vs = function_variants();
  if (std::find(vs.begin(), vs.end(), spec.variant) == vs.end())
    throw std::invalid_argument("function: unknown variant " + spec.variant);
  if (spec.randomized() && !spec.seed) throw std::invalid_argument("function: variant " + spec.variant + " needs a seed");
  if (spec.degree < 0) throw std::invalid_argument("function: degree must be >= 0");
  auto index = [&] {
    std::vector<int> idx = spec.index.empty() ? std::vector<int>(n, 0) : spec.index;
    if (static_cast<int>(idx.size()) != n) throw std::invalid_argument("function: index length must equal n");
    for (int a : idx)
      if (a < 0) throw std::invalid_argument("function: negative index entry");
    return hermite::MultiIndex(idx);
  };
  if (spec.variant == "gaussian") {
    if (!(spec.width > 0)) throw std::invalid_argument("function: width must be positive");
    Eigen::MatrixXd A = spec.width * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd B = spec.chirp * Eigen::MatrixXd::Identity(n, n);
    return canonical(TestFunction(PolyGaussian(Polynomial::constant(n, 1.0), A, B)));
  }
  if (spec.variant == "hermite") return TestFunction(HermiteExpansion(n, {{index(), 1.0}}));
  if (spec.variant == "monomial") return TestFunction(PolyGaussian::standard(Polynomial::monomial(index())));
  const std::uint64_t seed = *spec.seed;
  if (spec.variant == "ft-eigenfunction") {
    if (spec.k0 < 0 || spec.k0 > 3) throw std::invalid_argument("function: k0 must be in {0,1,2,3}");
    return TestFunction(make_ft_eigenfunction(n, spec.degree, spec.k0, seed));
  }
  if (spec.variant == "random") return TestFunction(random_expansion(n, spec.degree, seed));
  if (spec.variant == "random-phase") return TestFunction(random_phase_expansion(n, spec.degree, seed));
  // poisson
  if (!(spec.t >= 0)) throw std::invalid_argument("function: t must be >= 0");
  return TestFunction(heisenberg::poisson_semigroup(random_phase_expansion(n, spec.degree, seed), spec.t));
}

std::string describe(const FunctionSpec& spec) {
  std::ostringstream os;
  os << spec.variant;
  if (spec.variant == "gaussian") {
    os << "(width=" << spec.width;
    if (spec.chirp != 0.0) os << ",chirp=" << spec.chirp;
    os << ")";
  } else if (spec.variant == "hermite" || spec.variant == "monomial") {
    os << "(";
    for (std::size_t i = 0; i < spec.index.size(); ++i) os << (i ? "," : "") << spec.index[i];
    os << ")";
  } else {
    os << "(D=" << spec.degree;
    if (spec.variant == "ft-eigenfunction") os << ",k0=" << spec.k0;
    if (spec.variant == "poisson") os << ",t=" << spec.t;
    if (spec.seed) os << ",seed=" << *spec.seed;
    os << ")";
  }
  return os.str();
}

nlohmann::json to_json(const FunctionSpec& spec) {
  nlohmann::json j{{"variant", spec.variant}};
  if (!spec.index.empty()) j["index"] = spec.index;
  if (spec.degree != 0) j["degree"] = spec.degree;
  if (spec.k0 != 0) j["k0"] = spec.k0;
  if (spec.width != 0.5) j["width"] = spec.width;
  if (spec.chirp != 0.0) j["chirp"] = spec.chirp;
  if (spec.t != 0.0) j["t"] = spec.t;
  if (spec.seed) j["seed"] = *spec.seed;
  return j;
}

FunctionSpec function_spec_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known{"variant", "index", "degree", "k0", "width", "chirp", "t", "seed"};
  if (!j.is_object()) throw std::invalid_argument("function: expected an object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw std::invalid_argument("function: unknown field '" + key + "'");
  FunctionSpec s;
  s.variant = j.at("variant").get<std::string>();
  if (j.contains("index")) s.index = j["index"].get<std::vector<int>>();
  if (j.contains("degree")) s.degree = j["degree"].get<int>();
  if (j.contains("k0")) s.k0 = j["k0"].get<int>();
  if (j.contains("width")) s.width = j["width"].get<double>();
  if (j.contains("chirp")) s.chirp = j["chirp"].get<double>();
  if (j.contains("t")) s.t = j["t"].get<double>();
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  return s;
}

}  // namespace uplab::lab
