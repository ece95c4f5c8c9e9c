#include "nacog/commands.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <random>

#include "nacog/bialgebra.hpp"
#include "nacog/convolution.hpp"
#include "nacog/duality.hpp"
#include "nacog/sigma3.hpp"
#include "nacog/structure_file.hpp"

namespace nacog::cli {

namespace {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string format_result(const PredicateResult& r) {
  std::string line = r.name + ": " + (r.verdict.holds ? "true" : "false");
  if (const auto& w = r.verdict.witness) {
    line += " witness=" + format_indices(w->basis);
    if (w->perm) line += " sigma=" + std::string(w->perm->name());
    line += " defect=" + format_coordinates(w->defect);
  }
  return line;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

RatVector random_vector(std::mt19937_64& rng, std::size_t n) {
  RatVector v(n);
  for (auto& x : v) x = static_cast<long>(rng() % 101) - 50;
  return v;
}

// Relations that are linear in the associator (or coassociator), keyed by
// report name, so they can be re-evaluated on non-basis vectors.
std::vector<std::pair<std::string, sigma3::GroupVector>> sampled_relations(bool algebra) {
  std::vector<std::pair<std::string, sigma3::GroupVector>> rels;
  for (int i = 1; i <= 6; ++i) rels.emplace_back("G" + std::to_string(i), sigma3::alternating_vector(i));
  rels.emplace_back("lie-admissible", sigma3::GroupVector::sign_vector());
  if (algebra) rels.emplace_back("power3", sigma3::GroupVector::all_ones());
  return rels;
}

constexpr int kSamples = 8;

std::string sampling_line(const Structure& s, const std::vector<PredicateResult>& report,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool is_algebra = std::holds_alternative<Algebra>(s);
  const std::size_t n = is_algebra ? std::get<Algebra>(s).dim() : std::get<Coalgebra>(s).dim();
  std::vector<std::string> disagreements;
  for (const auto& [name, v] : sampled_relations(is_algebra)) {
    const auto it = std::find_if(report.begin(), report.end(), [&](const auto& r) { return r.name == name; });
    bool sampled_zero = true;
    for (int t = 0; t < kSamples; ++t) {
      if (is_algebra) {
        const RatVector x = random_vector(rng, n), y = random_vector(rng, n), z = random_vector(rng, n);
        if (!is_zero(relation_defect(std::get<Algebra>(s), v, x, y, z))) sampled_zero = false;
      } else {
        const RatVector x = random_vector(rng, n);
        if (!sigma3::phi_vector(v, coassociator(std::get<Coalgebra>(s), x)).is_zero()) sampled_zero = false;
      }
    }
    if (sampled_zero != it->verdict.holds) disagreements.push_back(name);
  }
  std::string line = "sampling(seed=" + std::to_string(seed) + ", " + std::to_string(kSamples) + " samples): ";
  if (disagreements.empty()) return line + "agrees with basis verdicts";
  line += "disagrees on";
  for (const auto& d : disagreements) line += " " + d;
  return line;
}

}  // namespace

int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Structure s = read_structure(path);
    const ShriekForm form = options.strict_shriek ? ShriekForm::literal : ShriekForm::invariance;
    const std::vector<PredicateResult> report = std::visit(
        [&](const auto& x) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Algebra>)
            return predicate_report(x);
          else
            return predicate_report(x, form);
        },
        s);

    std::vector<const PredicateResult*> selected;
    const std::string rel = lower(options.relation);
    for (const auto& r : report)
      if (rel == "all" || lower(r.name) == rel) selected.push_back(&r);
    if (selected.empty())
      throw InputError("relation '" + options.relation + "' does not apply to " +
                       (std::holds_alternative<Algebra>(s) ? "an algebra" : "a coalgebra"));

    bool all_pass = true;
    for (const auto* r : selected) {
      out << format_result(*r) << '\n';
      all_pass = all_pass && r->verdict.holds;
    }
    if (options.seed) out << sampling_line(s, report, *options.seed) << '\n';
    return all_pass ? kExitPass : kExitFail;
  });
}

int cmd_dualize(const std::string& path, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const Structure s = read_structure(path);
    const std::string text = std::holds_alternative<Algebra>(s)
                                 ? serialize(dual_coalgebra(std::get<Algebra>(s)))
                                 : serialize(dual_algebra(std::get<Coalgebra>(s)));
    if (out_path.empty())
      out << text;
    else
      write_text(out_path, text);
    return kExitPass;
  });
}

namespace {

std::pair<Algebra, Coalgebra> load_pair(const std::string& algebra_path, const std::string& coalgebra_path) {
  Structure a = read_structure(algebra_path);
  Structure c = read_structure(coalgebra_path);
  if (!std::holds_alternative<Algebra>(a)) throw InputError(algebra_path + ": expected kind \"algebra\"");
  if (!std::holds_alternative<Coalgebra>(c))
    throw InputError(coalgebra_path + ": expected kind \"coalgebra\"");
  return {std::get<Algebra>(std::move(a)), std::get<Coalgebra>(std::move(c))};
}

}  // namespace

int cmd_convolve(const std::string& algebra_path, const std::string& coalgebra_path,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [a, c] = load_pair(algebra_path, coalgebra_path);
    const std::string text = serialize(convolution_algebra(c, a));
    if (out_path.empty())
      out << text;
    else
      write_text(out_path, text);
    return kExitPass;
  });
}

int cmd_sigma3(const std::string& vector_text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    using namespace sigma3;
    const GroupVector v = GroupVector::parse(vector_text);
    out << "v: " << v.to_string() << '\n';
    out << "orbit:\n";
    const auto orbit = right_orbit(v);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      out << "  v*" << all_perms()[i].name() << ": " << orbit[i].to_string() << '\n';
    const auto basis = invariant_subspace(v);
    out << "basis of F_v:\n";
    if (basis.empty()) out << "  (none)\n";
    for (const auto& b : basis) out << "  " << b.to_string() << '\n';
    out << "dim F_v: " << basis.size() << '\n';
    const IsotypicDimensions iso = isotypic_dimensions(basis);
    out << "isotypic (trivial,sign,standard): (" << iso.trivial << ',' << iso.sign << ','
        << iso.standard << ")\n";
    std::vector<RatVector> rows;
    for (const auto& b : basis) rows.push_back(b.as_vector());
    out << "V in F_v: " << (in_span(GroupVector::sign_vector().as_vector(), rows) ? "yes" : "no") << '\n';
    return kExitPass;
  });
}

int cmd_bialgebra(const std::string& algebra_path, const std::string& coalgebra_path,
                  const std::string& compat, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (compat != "lie-admissible" && compat != "pre-lie")
      throw InputError("compatibility must be 'lie-admissible' or 'pre-lie', got '" + compat + "'");
    auto [a, c] = load_pair(algebra_path, coalgebra_path);
    const BialgebraCandidate b(std::move(a), std::move(c));
    std::vector<PredicateResult> lines;
    if (compat == "lie-admissible") {
      lines.push_back({"algebra lie-admissible", is_lie_admissible(b.algebra())});
      lines.push_back({"coalgebra lie-admissible", is_lie_admissible_coalgebra(b.coalgebra())});
      lines.push_back({"compatibility", lie_admissible_compatibility(b)});
    } else {
      lines.push_back({"algebra G3", is_gi_associative(b.algebra(), 3)});
      lines.push_back({"coalgebra G3", is_gi_coalgebra(b.coalgebra(), 3)});
      lines.push_back({"compatibility", check_prelie_bialgebra_compat(b)});
    }
    const bool pass = std::all_of(lines.begin(), lines.end(), [](const auto& r) { return r.verdict.holds; });
    for (const auto& r : lines) out << format_result(r) << '\n';
    out << compat << " bialgebra: " << (pass ? "true" : "false") << '\n';
    return pass ? kExitPass : kExitFail;
  });
}

}  // namespace nacog::cli
