#include "ramify/gen.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "ramify/cover_io.hpp"
#include "ramify/errors.hpp"
#include "ramify/fiber.hpp"

namespace ramify
{

Range parse_range(std::string const &text)
{
  auto number = [&](std::string const &s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("invalid range '" + text + "'");
    return std::stoul(s);
  };
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi)
    throw ParseError("empty range '" + text + "'");
  return r;
}

void CorpusSpec::check() const
{
  if (degree.lo > degree.hi || genus.lo > genus.hi || branch_points.lo > branch_points.hi)
    throw InvalidArgument("corpus ranges must be nonempty");
  if (degree.lo < 1)
    throw InvalidArgument("degree must be at least 1");
  if (random_mode() && !seed)
    throw InvalidArgument("random mode needs a seed");
}

char const *to_string(Check check)
{
  switch (check) {
  case Check::equivalence:
    return "equivalence";
  case Check::theorem_main:
    return "theorem_main";
  case Check::two_transitive:
    return "two_transitive";
  case Check::sd_cover:
    return "sd_cover";
  case Check::derived_cover:
    return "derived_cover";
  case Check::cayley_oracle:
    return "cayley_oracle";
  }
  return "?";
}

namespace
{

bool transitive_on(std::size_t degree, std::vector<Permutation const *> const &gens)
{
  std::vector<std::size_t> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = degree;
  for (auto const *g : gens)
    for (Point i = 0; i < degree; ++i) {
      auto a = find(i), b = find((*g)(i));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components <= 1;
}

std::size_t max_enumerable_degree(std::size_t genus)
{
  return genus == 0 ? 5 : genus == 1 ? 3 : 2;
}

std::vector<Permutation> transpositions(std::size_t degree)
{
  std::vector<Permutation> out;
  for (Point i = 0; i < degree; ++i)
    for (Point j = i + 1; j < degree; ++j)
      out.push_back(Permutation::transposition(degree, i, j));
  return out;
}

bool accept_last(Permutation const &last, bool morse)
{
  return morse ? last.is_transposition() : !last.is_identity();
}

void enumerate_box(std::size_t d, std::size_t g, std::size_t r, bool morse,
                   std::set<std::vector<Point>> *seen, CoverSink const &sink)
{
  std::vector<Permutation> all = symmetric_group_elements(d);
  std::vector<Permutation> branch_choices;
  if (morse)
    branch_choices = transpositions(d);
  else
    branch_choices.assign(all.begin() + 1, all.end()); // identity is first

  std::size_t slots = 2 * g + (r > 0 ? r - 1 : 0);
  std::vector<std::vector<Permutation> const *> domain;
  for (std::size_t k = 0; k < 2 * g; ++k)
    domain.push_back(&all);
  for (std::size_t k = 2 * g; k < slots; ++k)
    domain.push_back(&branch_choices);

  long double total = 1;
  for (auto const *dom : domain)
    total *= static_cast<long double>(dom->size());
  if (total > static_cast<long double>(enumeration_cap))
    throw CapExceeded("enumeration of d=" + std::to_string(d) + ", g=" + std::to_string(g) +
                      ", r=" + std::to_string(r) + " exceeds the cap");
  for (auto const *dom : domain)
    if (dom->empty())
      return;
  if (r > 0 && branch_choices.empty())
    return;

  std::vector<std::size_t> index(slots, 0);
  for (;;) {
    BranchedCover c;
    c.degree = d;
    c.base_genus = g;
    for (std::size_t h = 0; h < g; ++h)
      c.handles.emplace_back((*domain[2 * h])[index[2 * h]], (*domain[2 * h + 1])[index[2 * h + 1]]);
    for (std::size_t k = 2 * g; k < slots; ++k)
      c.branch_cycles.push_back((*domain[k])[index[k]]);

    Permutation product = c.relation_product();
    bool keep;
    if (r == 0) {
      keep = product.is_identity();
    } else {
      Permutation last = product.inverse();
      keep = accept_last(last, morse);
      if (keep)
        c.branch_cycles.push_back(std::move(last));
    }
    if (keep) {
      std::vector<Permutation const *> gens;
      for (auto const &[a, b] : c.handles) {
        gens.push_back(&a);
        gens.push_back(&b);
      }
      for (auto const &cyc : c.branch_cycles)
        gens.push_back(&cyc);
      keep = transitive_on(d, gens);
    }
    if (keep && seen)
      keep = seen->insert(canonical_key(c)).second;
    if (keep)
      sink(c);

    std::size_t k = slots;
    while (k > 0) {
      --k;
      if (++index[k] < domain[k]->size())
        break;
      index[k] = 0;
      if (k == 0) {
        k = slots + 1;
        break;
      }
    }
    if (slots == 0 || k == slots + 1)
      return;
  }
}

std::vector<Permutation const *> generator_list(BranchedCover const &c)
{
  std::vector<Permutation const *> gens;
  for (auto const &[a, b] : c.handles) {
    gens.push_back(&a);
    gens.push_back(&b);
  }
  for (auto const &cyc : c.branch_cycles)
    gens.push_back(&cyc);
  return gens;
}

std::size_t uniform_index(std::mt19937_64 &rng, std::size_t n)
{
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Permutation random_element(std::mt19937_64 &rng, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = degree; i > 1; --i)
    std::swap(images[i - 1], images[uniform_index(rng, i)]);
  return Permutation::from_images(std::move(images));
}

Permutation random_transposition(std::mt19937_64 &rng, std::size_t degree)
{
  Point i = static_cast<Point>(uniform_index(rng, degree));
  Point j = static_cast<Point>(uniform_index(rng, degree - 1));
  if (j >= i)
    ++j;
  return Permutation::transposition(degree, std::min(i, j), std::max(i, j));
}

Permutation random_nontrivial(std::mt19937_64 &rng, std::size_t degree)
{
  for (;;) {
    Permutation p = random_element(rng, degree);
    if (!p.is_identity())
      return p;
  }
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t k)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

void record(VerificationReport &rep, Check check, bool passed, std::string const &message,
            BranchedCover const &c)
{
  auto &count = rep.counts[static_cast<std::size_t>(check)];
  ++count.checked;
  if (passed)
    ++count.passed;
  else
    rep.violations.push_back({check, message, c});
}

void sort_violations(std::vector<CorpusViolation> &v)
{
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < v.size(); ++i)
    keys.emplace_back(std::to_string(static_cast<int>(v[i].check)) + "\n" +
                          to_cover_text(v[i].cover) + "\n" + v[i].message,
                      i);
  std::sort(keys.begin(), keys.end());
  std::vector<CorpusViolation> sorted;
  for (auto const &[key, i] : keys)
    sorted.push_back(std::move(v[i]));
  v = std::move(sorted);
}

} // anonymous namespace

std::vector<Point> canonical_key(BranchedCover const &c)
{
  auto gens = generator_list(c);
  std::vector<Point> best;
  for (auto const &sigma : symmetric_group_elements(c.degree)) {
    std::vector<Point> key{static_cast<Point>(c.degree), static_cast<Point>(c.base_genus),
                           static_cast<Point>(c.branch_cycles.size())};
    // (sigma g sigma^-1)(sigma(i)) = sigma(g(i))
    for (auto const *g : gens) {
      std::size_t offset = key.size();
      key.resize(offset + c.degree);
      for (Point i = 0; i < c.degree; ++i)
        key[offset + sigma(i)] = sigma((*g)(i));
    }
    if (best.empty() || key < best)
      best = std::move(key);
  }
  return best;
}

BranchedCover canonical_form(BranchedCover const &c)
{
  std::vector<Point> best;
  BranchedCover out;
  for (auto const &sigma : symmetric_group_elements(c.degree)) {
    BranchedCover candidate = relabel(c, sigma);
    std::vector<Point> key;
    for (auto const *g : generator_list(candidate))
      key.insert(key.end(), g->images().begin(), g->images().end());
    if (best.empty() && key.empty())
      return candidate;
    if (best.empty() || key < best) {
      best = std::move(key);
      out = std::move(candidate);
    }
  }
  return out;
}

void enumerate_covers(CorpusSpec const &spec, CoverSink const &sink)
{
  spec.check();
  for (std::size_t g = spec.genus.lo; g <= spec.genus.hi; ++g)
    if (spec.degree.hi > max_enumerable_degree(g))
      throw CapExceeded("exhaustive enumeration supports d <= " +
                        std::to_string(max_enumerable_degree(g)) + " at genus " + std::to_string(g));
  std::set<std::vector<Point>> seen;
  for (std::size_t d = spec.degree.lo; d <= spec.degree.hi; ++d)
    for (std::size_t g = spec.genus.lo; g <= spec.genus.hi; ++g)
      for (std::size_t r = spec.branch_points.lo; r <= spec.branch_points.hi; ++r)
        enumerate_box(d, g, r, spec.morse_only, spec.dedup ? &seen : nullptr, sink);
}

std::vector<BranchedCover> enumerate_covers(CorpusSpec const &spec)
{
  std::vector<BranchedCover> out;
  enumerate_covers(spec, [&](BranchedCover const &c) { out.push_back(c); });
  return out;
}

BranchedCover random_cover(CorpusSpec const &spec, std::uint64_t seed)
{
  spec.check();
  std::mt19937_64 rng(seed);

  std::vector<std::size_t> counts;
  for (std::size_t r = spec.branch_points.lo; r <= spec.branch_points.hi; ++r)
    if (!spec.morse_only || r % 2 == 0)
      counts.push_back(r);
  if (counts.empty())
    throw Infeasible("no Morse cover exists with an odd number of branch points: the product of "
                     "an odd number of transpositions is an odd permutation, while commutators "
                     "are even, so the surface relation can never hold");

  if (spec.degree.hi == 1 && spec.branch_points.lo > 0)
    throw Infeasible("degree 1 has no nontrivial branch cycles; r must be 0");

  for (std::size_t attempt = 0; attempt < rejection_budget; ++attempt) {
    std::size_t d = spec.degree.lo + uniform_index(rng, spec.degree.hi - spec.degree.lo + 1);
    std::size_t g = spec.genus.lo + uniform_index(rng, spec.genus.hi - spec.genus.lo + 1);
    std::size_t r = counts[uniform_index(rng, counts.size())];
    if (d == 1 && r > 0)
      continue;
    BranchedCover c;
    c.degree = d;
    c.base_genus = g;
    for (std::size_t h = 0; h < g; ++h) {
      Permutation a = random_element(rng, d);
      Permutation b = random_element(rng, d);
      c.handles.emplace_back(std::move(a), std::move(b));
    }
    for (std::size_t k = 0; k + 1 < r; ++k)
      c.branch_cycles.push_back(spec.morse_only ? random_transposition(rng, d)
                                                : random_nontrivial(rng, d));
    Permutation product = c.relation_product();
    if (r == 0) {
      if (!product.is_identity())
        continue;
    } else {
      Permutation last = product.inverse();
      if (!accept_last(last, spec.morse_only))
        continue;
      c.branch_cycles.push_back(std::move(last));
    }
    if (!transitive_on(d, generator_list(c)))
      continue;
    return c;
  }
  auto range = [](Range const &x) {
    return x.lo == x.hi ? std::to_string(x.lo) : std::to_string(x.lo) + ".." + std::to_string(x.hi);
  };
  std::string msg = "rejection budget of " + std::to_string(rejection_budget) +
                    " draws exhausted for d=" + range(spec.degree) + ", g=" + range(spec.genus) +
                    ", r=" + range(spec.branch_points);
  if (spec.morse_only && spec.genus.hi == 0 && spec.branch_points.hi < 2 * (spec.degree.lo - 1))
    msg += " (a transitive Morse cover of P^1 needs r >= 2d-2)";
  throw Infeasible(msg);
}

std::vector<BranchedCover> random_covers(CorpusSpec const &spec)
{
  spec.check();
  if (!spec.seed)
    throw InvalidArgument("random mode needs a seed");
  std::vector<BranchedCover> out;
  for (std::size_t k = 0; k < spec.samples; ++k)
    out.push_back(random_cover(spec, sample_seed(*spec.seed, k)));
  return out;
}

VerificationReport verify_cover(BranchedCover const &c, std::uint64_t oracle_cap)
{
  VerificationReport rep;
  rep.covers = 1;
  ValidationResult validity = validate(c);
  if (!validity.ok()) {
    rep.violations.push_back(
        {Check::equivalence, "not a valid cover: " + validity.violations.front().message, c});
    return rep;
  }
  try {
    std::size_t d = c.degree;
    GeneratedGroup group = monodromy_group(c);
    OrbitalDecomposition decomposition = orbital_decomposition(c);
    Graph dual = dual_graph(decomposition, scheme_points(c, decomposition));
    Connectivity fiber = is_connected(dual);
    GenuineRamification gr = genuinely_ramified(c);
    bool morse = is_morse(c);
    bool galois = is_galois(c);
    rep.genuinely_ramified = gr.genuinely_ramified;
    rep.morse = morse;
    rep.galois = galois;

    record(rep, Check::equivalence, gr.genuinely_ramified == fiber.connected,
           std::string("HN = G is ") + (gr.genuinely_ramified ? "true" : "false") +
               " but the dual graph is " + (fiber.connected ? "connected" : "disconnected"),
           c);

    OffDiagonalConnectivity off = offdiag_closure_connected(dual);
    auto &main_count = rep.counts[static_cast<std::size_t>(Check::theorem_main)];
    if (d == 1)
      ++main_count.vacuous;
    else if (gr.genuinely_ramified)
      record(rep, Check::theorem_main, off.connected,
             "genuinely ramified but the off-diagonal closure has " +
                 std::to_string(off.components) + " components",
             c);
    else
      ++main_count.skipped;

    bool two_orbitals = decomposition.orbitals.size() == 2;
    bool two_transitive = transitivity(group) == Transitivity::two_transitive;
    record(rep, Check::two_transitive, two_orbitals == two_transitive,
           std::to_string(decomposition.orbitals.size()) + " orbitals but the group is " +
               to_string(transitivity(group)),
           c);

    bool morse_gr = morse && gr.genuinely_ramified && d >= 2;
    auto &sd_count = rep.counts[static_cast<std::size_t>(Check::sd_cover)];
    if (morse_gr) {
      std::string message;
      bool passed = true;
      std::uint64_t order = galois_closure_order(c);
      if (order != factorial(d)) {
        passed = false;
        message = "Galois closure order " + std::to_string(order) + " != d!";
      }
      try {
        if (!std::holds_alternative<SdCertificate>(certify_sd(c))) {
          passed = false;
          message = "certify_sd refused a Morse genuinely ramified cover";
        }
      } catch (TheoremViolation const &e) {
        passed = false;
        message = e.what();
      }
      record(rep, Check::sd_cover, passed, message, c);
    } else {
      ++sd_count.skipped;
    }

    auto &derived_count = rep.counts[static_cast<std::size_t>(Check::derived_cover)];
    if (morse_gr && d >= 3) {
      DerivedCover q = derived_cover_q1(c);
      std::string message;
      if (q.degree != d - 1)
        message = "derived degree " + std::to_string(q.degree);
      else if (!q.irreducible)
        message = "derived cover is reducible";
      else if (!q.morse)
        message = "derived cover is not Morse";
      else if (!q.genuinely_ramified)
        message = "derived cover is not genuinely ramified";
      else if (!q.total_space_genus)
        message = "derived cover genus unavailable";
      else {
        std::size_t over_x = total_space_genus(component_cover(c, decomposition.orbitals.at(1)));
        if (over_x != *q.total_space_genus)
          message = "genus of Y' is " + std::to_string(over_x) + " over X but " +
                    std::to_string(*q.total_space_genus) + " over Y";
      }
      record(rep, Check::derived_cover, message.empty(), message, c);
    } else {
      ++derived_count.skipped;
    }

    auto &oracle_count = rep.counts[static_cast<std::size_t>(Check::cayley_oracle)];
    if (galois && group.order() <= oracle_cap) {
      CayleyOracle oracle = cayley_quotient_oracle(c, oracle_cap);
      record(rep, Check::cayley_oracle, oracle.computed && oracle.relation == GraphRelation::equal,
             std::string("Cayley quotient relation: ") + to_string(oracle.relation), c);
    } else {
      ++oracle_count.skipped;
    }
  } catch (Error const &e) {
    rep.violations.push_back({Check::equivalence, std::string("exception: ") + e.what(), c});
  }
  return rep;
}

void merge(VerificationReport &into, VerificationReport const &from)
{
  into.covers += from.covers;
  into.genuinely_ramified += from.genuinely_ramified;
  into.morse += from.morse;
  into.galois += from.galois;
  for (std::size_t k = 0; k < check_count; ++k) {
    into.counts[k].checked += from.counts[k].checked;
    into.counts[k].passed += from.counts[k].passed;
    into.counts[k].vacuous += from.counts[k].vacuous;
    into.counts[k].skipped += from.counts[k].skipped;
  }
  into.violations.insert(into.violations.end(), from.violations.begin(), from.violations.end());
}

VerificationReport verify_covers(std::vector<BranchedCover> const &covers, unsigned jobs,
                                 std::uint64_t oracle_cap)
{
  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, covers.size())));

  VerificationReport total;
  if (jobs <= 1) {
    for (auto const &c : covers)
      merge(total, verify_cover(c, oracle_cap));
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        VerificationReport local;
        for (std::size_t i = next++; i < covers.size(); i = next++)
          merge(local, verify_cover(covers[i], oracle_cap));
        std::lock_guard guard(lock);
        merge(total, local);
      });
    for (auto &t : workers)
      t.join();
  }
  sort_violations(total.violations);
  return total;
}

VerificationReport verify_corpus(CorpusSpec const &spec, unsigned jobs)
{
  spec.check();
  if (spec.random_mode())
    return verify_covers(random_covers(spec), jobs);

  VerificationReport total;
  std::vector<BranchedCover> batch;
  auto flush = [&] {
    merge(total, verify_covers(batch, jobs));
    batch.clear();
  };
  enumerate_covers(spec, [&](BranchedCover const &c) {
    batch.push_back(c);
    if (batch.size() == 4096)
      flush();
  });
  flush();
  sort_violations(total.violations);
  return total;
}

} // namespace ramify
