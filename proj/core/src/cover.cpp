#include "ramify/cover.hpp"

#include "ramify/errors.hpp"

namespace ramify
{

char const *to_string(ViolationKind kind)
{
  switch (kind) {
    case ViolationKind::degree_mismatch:
      return "degree_mismatch";
    case ViolationKind::handle_count:
      return "handle_count";
    case ViolationKind::relation_fails:
      return "relation_fails";
    case ViolationKind::intransitive:
      return "intransitive";
    case ViolationKind::identity_branch_cycle:
      return "identity_branch_cycle";
    case ViolationKind::label_count:
      return "label_count";
    case ViolationKind::genus_inconsistent:
      return "genus_inconsistent";
  }
  return "?";
}

std::vector<Permutation> BranchedCover::generators() const
{
  std::vector<Permutation> gens;
  for (auto const &[a, b] : handles) {
    gens.push_back(a);
    gens.push_back(b);
  }
  gens.insert(gens.end(), branch_cycles.begin(), branch_cycles.end());
  return gens;
}

Permutation BranchedCover::relation_product() const
{
  Permutation product(degree);
  for (auto const &[a, b] : handles)
    product = compose(product, commutator(a, b));
  for (auto const &c : branch_cycles)
    product = compose(product, c);
  return product;
}

namespace
{

long long riemann_hurwitz_twice_genus_minus_two(BranchedCover const &c)
{
  long long chi = static_cast<long long>(c.degree) *
                  (2 * static_cast<long long>(c.base_genus) - 2);
  for (auto const &cycle : c.branch_cycles)
    chi += static_cast<long long>(cycle.ramification_contribution());
  return chi;
}

std::size_t genus_from_count(long long twice_genus_minus_two)
{
  if (twice_genus_minus_two < -2 || twice_genus_minus_two % 2 != 0)
    throw ModelInconsistency("Riemann-Hurwitz gives 2g-2 = " +
                             std::to_string(twice_genus_minus_two));
  return static_cast<std::size_t>((twice_genus_minus_two + 2) / 2);
}

} // anonymous namespace

ValidationResult validate(BranchedCover const &c)
{
  ValidationResult result;
  auto add = [&](ViolationKind kind, std::string message) {
    result.violations.push_back({kind, std::move(message)});
  };

  if (c.degree == 0)
    add(ViolationKind::degree_mismatch, "degree must be positive");
  if (c.handles.size() != c.base_genus)
    add(ViolationKind::handle_count,
        "expected " + std::to_string(c.base_genus) + " handle pairs, found " +
            std::to_string(c.handles.size()));

  bool degrees_ok = c.degree > 0;
  for (auto const &g : c.generators()) {
    if (g.degree() != c.degree) {
      add(ViolationKind::degree_mismatch,
          "generator of degree " + std::to_string(g.degree()) + " in a degree " +
              std::to_string(c.degree) + " cover");
      degrees_ok = false;
    }
  }
  for (std::size_t j = 0; j < c.branch_cycles.size(); ++j)
    if (c.branch_cycles[j].is_identity())
      add(ViolationKind::identity_branch_cycle,
          "branch cycle " + std::to_string(j + 1) + " is the identity");
  if (c.labels && c.labels->size() != c.branch_cycles.size())
    add(ViolationKind::label_count, "label count differs from branch cycle count");

  if (!degrees_ok)
    return result;

  Permutation product = c.relation_product();
  if (!product.is_identity())
    add(ViolationKind::relation_fails,
        "surface relation evaluates to " + to_cycle_string(product));

  GeneratedGroup group = monodromy_group(c);
  if (!group.is_transitive())
    add(ViolationKind::intransitive,
        "monodromy group has " + std::to_string(group.orbits().size()) + " orbits");

  if (!result.ok())
    return result;

  CoverReport report;
  try {
    report.total_space_genus = total_space_genus(c);
  } catch (ModelInconsistency const &e) {
    add(ViolationKind::genus_inconsistent, e.what());
    return result;
  }
  report.valid = true;
  report.degree = c.degree;
  report.base_genus = c.base_genus;
  report.branch_point_count = c.branch_cycles.size();
  report.monodromy_order = group.order();
  report.is_morse = is_morse(c);
  report.is_galois = group.order() == c.degree;
  report.is_connected = true;
  result.report = report;
  return result;
}

void require_valid(BranchedCover const &c)
{
  auto result = validate(c);
  if (result.ok())
    return;
  std::string message = "invalid cover:";
  for (auto const &v : result.violations)
    message += " [" + std::string(to_string(v.kind)) + "] " + v.message + ";";
  throw InvalidArgument(message);
}

GeneratedGroup monodromy_group(BranchedCover const &c)
{
  return GeneratedGroup(c.degree, c.generators());
}

std::size_t total_space_genus(BranchedCover const &c)
{
  return genus_from_count(riemann_hurwitz_twice_genus_minus_two(c));
}

bool is_morse(BranchedCover const &c)
{
  for (auto const &cycle : c.branch_cycles)
    if (!cycle.is_transposition())
      return false;
  return true;
}

bool is_galois(BranchedCover const &c)
{
  return monodromy_group(c).order() == c.degree;
}

BranchedCover relabel(BranchedCover const &c, Permutation const &sigma)
{
  BranchedCover out = c;
  for (auto &[a, b] : out.handles) {
    a = conjugate(a, sigma);
    b = conjugate(b, sigma);
  }
  for (auto &cycle : out.branch_cycles)
    cycle = conjugate(cycle, sigma);
  return out;
}

} // namespace ramify
