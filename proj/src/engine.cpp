#include "relkit/engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relkit/error.hpp"

namespace relkit {

void Scheme::add_domain(Domain d) {
  const std::string name = d.name();
  if (!domains_.emplace(name, std::move(d)).second)
    throw SchemaError("duplicate domain " + name);
}

void Scheme::add_attribute(Index attr, const std::string& domain_name) {
  if (!has_domain(domain_name))
    throw SchemaError("attribute " + to_string(attr) + ": unknown domain " +
                      domain_name);
  if (!attribute_domain_.emplace(attr, domain_name).second)
    throw SchemaError("duplicate attribute " + to_string(attr));
}

void Scheme::add_relation(RelationSchema schema) {
  if (schema.attributes.empty())
    throw SchemaError("relation " + schema.name + " has no attributes");
  for (const Index& a : schema.attributes)
    if (!has_attribute(a))
      throw SchemaError("relation " + schema.name + ": unknown attribute " +
                        to_string(a));
  if (!index_subset(schema.key, schema.attributes))
    throw SchemaError("relation " + schema.name +
                      ": key mentions attributes outside the relation");
  const std::string name = schema.name;
  if (!relations_.emplace(name, std::move(schema)).second)
    throw SchemaError("duplicate relation " + name);
}

bool Scheme::has_domain(const std::string& name) const {
  return domains_.count(name) > 0;
}

const Domain& Scheme::domain(const std::string& name) const {
  auto it = domains_.find(name);
  if (it == domains_.end()) throw SchemaError("unknown domain " + name);
  return it->second;
}

bool Scheme::has_attribute(const Index& attr) const {
  return attribute_domain_.count(attr) > 0;
}

const Domain& Scheme::domain_of(const Index& attr) const {
  auto it = attribute_domain_.find(attr);
  if (it == attribute_domain_.end())
    throw SchemaError("unknown attribute " + to_string(attr));
  return domain(it->second);
}

bool Scheme::has_relation(const std::string& name) const {
  return relations_.count(name) > 0;
}

const RelationSchema& Scheme::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw SchemaError("unknown relation " + name);
  return it->second;
}

std::vector<std::string> Scheme::relation_names() const {
  std::vector<std::string> out;
  out.reserve(relations_.size());
  for (const auto& [name, schema] : relations_) out.push_back(name);
  return out;
}

Signature Scheme::signature_of(const std::string& rel_name) const {
  const RelationSchema& schema = relation(rel_name);
  std::vector<std::pair<Index, Domain>> entries;
  entries.reserve(schema.attributes.size());
  for (const Index& a : schema.attributes) entries.emplace_back(a, domain_of(a));
  return Signature(std::move(entries));
}

Instance::Instance(Scheme scheme, std::map<std::string, Relation> extents)
    : scheme_(std::move(scheme)), extents_(std::move(extents)) {
  for (const auto& [name, rel] : extents_) {
    if (!scheme_.has_relation(name))
      throw SchemaError("extent for undeclared relation " + name);
    if (rel.signature() != scheme_.signature_of(name))
      throw SchemaError("relation " + name +
                        ": extent signature differs from the scheme's");
    const IndexSet& key = scheme_.relation(name).key;
    if (!key.empty() && !is_key(rel, key))
      throw SchemaError("relation " + name + ": declared key does not hold");
  }
  for (const std::string& name : scheme_.relation_names())
    if (extents_.find(name) == extents_.end())
      extents_.emplace(name, Relation(scheme_.signature_of(name)));
}

const Relation& Instance::relation(const std::string& name) const {
  auto it = extents_.find(name);
  if (it == extents_.end()) throw SchemaError("unknown relation " + name);
  return it->second;
}

std::vector<std::string> Instance::relation_names() const {
  return scheme_.relation_names();
}

namespace {

bool natural_kind(const Domain& d) {
  return d.payload_kind() == PayloadKind::Integer;
}

std::optional<std::string> validate_leq(const std::vector<Domain>& domains) {
  for (const Domain& d : domains)
    if (!natural_kind(d))
      return "leq: domain " + d.name() + " is not natural-valued";
  return std::nullopt;
}

std::optional<std::string> validate_eq(const std::vector<Domain>& domains) {
  const auto k0 = domains[0].payload_kind();
  const auto k1 = domains[1].payload_kind();
  if (k0 && k1 && *k0 != *k1)
    return "eq: domains " + domains[0].name() + " and " + domains[1].name() +
           " hold different payload kinds";
  return std::nullopt;
}

bool leq_predicate(const Tuple& t) {
  const Payload& lo = t.at(Index::name("rqty")).payload;
  const Payload& hi = t.at(Index::name("pqty")).payload;
  if (!std::holds_alternative<std::int64_t>(lo) ||
      !std::holds_alternative<std::int64_t>(hi))
    return false;
  return std::get<std::int64_t>(lo) <= std::get<std::int64_t>(hi);
}

bool eq_predicate(const Tuple& t) {
  return t.at(Index::name("a")).payload == t.at(Index::name("b")).payload;
}

}  // namespace

const std::vector<IntensionalRelation>& builtin_relations() {
  static const std::vector<IntensionalRelation> builtins = {
      IntensionalRelation{"leq",
                          {Index::name("rqty"), Index::name("pqty")},
                          validate_leq,
                          leq_predicate},
      IntensionalRelation{"eq",
                          {Index::name("a"), Index::name("b")},
                          validate_eq,
                          eq_predicate},
  };
  return builtins;
}

const IntensionalRelation* find_builtin(const std::string& name) {
  for (const IntensionalRelation& b : builtin_relations())
    if (b.name == name) return &b;
  return nullptr;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;  // fits in uint64
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Index attribute_index(const std::string& token) {
  if (all_digits(token)) return Index::pos(std::stoull(token));
  return Index::name(token);
}

CompiledAtom compile_atom(const Rule::Atom& atom, const Scheme& scheme) {
  CompiledAtom out;
  out.relation = atom.relation;

  IndexSet rel_indexes;
  if (scheme.has_relation(atom.relation)) {
    rel_indexes = scheme.relation(atom.relation).attributes;
  } else if (const IntensionalRelation* b = find_builtin(atom.relation)) {
    out.intensional = true;
    rel_indexes = make_index_set(b->attributes);
  } else {
    throw QueryError("unknown relation " + atom.relation);
  }

  std::vector<std::pair<Index, std::string>> entries;
  if (atom.positional) {
    if (out.intensional)
      throw QueryError(atom.relation +
                       ": positional arguments require a position-indexed "
                       "stored relation");
    for (std::size_t k = 0; k < atom.args.size(); ++k)
      entries.emplace_back(Index::pos(k), atom.args[k].second);
  } else {
    for (const auto& [attr, var] : atom.args)
      entries.emplace_back(attribute_index(attr), var);
  }

  Pattern pattern;
  try {
    pattern = Pattern(std::move(entries));
  } catch (const TypeError& e) {
    throw QueryError(atom.relation + ": " + e.what());
  }
  if (pattern.indexes() != rel_indexes)
    throw QueryError(atom.relation +
                     ": atom arguments do not cover the relation's attributes "
                     "exactly");
  for (const auto& [i, v] : pattern.entries()) out.variables.push_back(v);
  out.pattern = std::move(pattern);
  return out;
}

}  // namespace

CompiledRule compile_rule(const Rule& rule, const Scheme& scheme) {
  if (rule.body.empty()) throw QueryError("rule has an empty body");

  CompiledRule out;
  out.head_vars = rule.head_vars;
  for (std::size_t i = 0; i < rule.head_vars.size(); ++i)
    for (std::size_t j = i + 1; j < rule.head_vars.size(); ++j)
      if (rule.head_vars[i] == rule.head_vars[j])
        throw QueryError("duplicate head variable " + rule.head_vars[i]);

  for (const Rule::Atom& atom : rule.body)
    out.atoms.push_back(compile_atom(atom, scheme));

  // fix every finite-bound variable's domain; same variable, same domain
  for (const CompiledAtom& atom : out.atoms) {
    if (atom.intensional) continue;
    const Signature sig = scheme.signature_of(atom.relation);
    for (const auto& [i, var] : atom.pattern.entries()) {
      const Domain& d = sig.at(i);
      auto it = out.var_domains.find(var);
      if (it == out.var_domains.end()) {
        out.var_domains.emplace(var, d);
      } else if (it->second != d) {
        throw QueryError("variable " + var +
                         " is bound to two different domains (" +
                         it->second.name() + " and " + d.name() + ")");
      }
    }
  }

  // per-use-site binding checks for fully bound intensional atoms
  for (const CompiledAtom& atom : out.atoms) {
    if (!atom.intensional) continue;
    const IntensionalRelation* b = find_builtin(atom.relation);
    std::vector<Domain> binding;
    bool complete = true;
    for (const Index& attr : b->attributes) {
      auto it = out.var_domains.find(atom.pattern.at(attr));
      if (it == out.var_domains.end()) {
        complete = false;  // left for the safety check in make_plan
        break;
      }
      binding.push_back(it->second);
    }
    if (complete && b->validate_binding) {
      if (auto err = b->validate_binding(binding)) throw QueryError(*err);
    }
  }

  std::set<std::string> body_vars;
  for (const CompiledAtom& atom : out.atoms)
    body_vars.insert(atom.variables.begin(), atom.variables.end());
  for (const std::string& v : rule.head_vars)
    if (body_vars.find(v) == body_vars.end())
      throw QueryError("head variable " + v + " does not occur in the body");

  return out;
}

namespace {

Plan build_plan(const CompiledRule& rule, std::vector<std::size_t> finite_order,
                std::map<std::size_t, std::size_t> sizes) {
  Plan plan{rule, {}, std::move(sizes)};
  std::set<std::string> bound;
  std::vector<bool> applied(rule.atoms.size(), false);

  const auto apply_ready = [&] {
    for (std::size_t a = 0; a < rule.atoms.size(); ++a) {
      if (!rule.atoms[a].intensional || applied[a]) continue;
      const auto& vars = rule.atoms[a].variables;
      const bool ready = std::all_of(vars.begin(), vars.end(), [&](const auto& v) {
        return bound.count(v) > 0;
      });
      if (ready) {
        plan.steps.push_back({PlanStep::Kind::Apply, a});
        applied[a] = true;
      }
    }
  };

  for (std::size_t a : finite_order) {
    plan.steps.push_back({PlanStep::Kind::Join, a});
    bound.insert(rule.atoms[a].variables.begin(), rule.atoms[a].variables.end());
    apply_ready();
  }

  for (std::size_t a = 0; a < rule.atoms.size(); ++a) {
    if (rule.atoms[a].intensional && !applied[a]) {
      std::string unbound;
      for (const std::string& v : rule.atoms[a].variables)
        if (bound.count(v) == 0) unbound += (unbound.empty() ? "" : ", ") + v;
      throw QueryError("unsafe rule: variable(s) " + unbound + " of " +
                       rule.atoms[a].relation +
                       " are never bound by a finite atom");
    }
  }
  for (const std::string& v : rule.head_vars)
    if (bound.count(v) == 0)
      throw QueryError("unsafe rule: head variable " + v +
                       " is never bound by a finite atom");
  return plan;
}

std::map<std::size_t, std::size_t> filtered_sizes(const CompiledRule& rule,
                                                  const Instance& instance) {
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t a = 0; a < rule.atoms.size(); ++a)
    if (!rule.atoms[a].intensional)
      sizes[a] =
          filter(instance.relation(rule.atoms[a].relation), rule.atoms[a].pattern)
              .size();
  return sizes;
}

}  // namespace

Plan make_plan(const CompiledRule& rule, const Instance& instance) {
  auto sizes = filtered_sizes(rule, instance);
  std::vector<std::size_t> order;
  for (const auto& [a, n] : sizes) order.push_back(a);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return sizes.at(a) < sizes.at(b);
                   });
  return build_plan(rule, std::move(order), std::move(sizes));
}

Plan make_plan_with_order(const CompiledRule& rule, const Instance& instance,
                          const std::vector<std::size_t>& finite_order) {
  auto sizes = filtered_sizes(rule, instance);
  std::vector<std::size_t> expected;
  for (const auto& [a, n] : sizes) expected.push_back(a);
  std::vector<std::size_t> given = finite_order;
  std::sort(given.begin(), given.end());
  if (given != expected)
    throw QueryError("make_plan_with_order: not a permutation of the finite atoms");
  return build_plan(rule, finite_order, std::move(sizes));
}

namespace {

Relation apply_intensional(const Relation& r, const CompiledAtom& atom) {
  const IntensionalRelation* b = find_builtin(atom.relation);
  std::vector<Tuple> kept;
  for (const Tuple& s : r.extent()) {
    std::vector<std::pair<Index, Atom>> entries;
    for (const auto& [i, var] : atom.pattern.entries())
      entries.emplace_back(i, s.at(Index::name(var)));
    if (b->predicate(Tuple(std::move(entries)))) kept.push_back(s);
  }
  return Relation(r.signature(), std::move(kept));
}

}  // namespace

Relation evaluate(const Plan& plan, const Instance& instance,
                  const Limits& limits) {
  const CompiledRule& rule = plan.rule;
  std::optional<Relation> current;
  for (const PlanStep& step : plan.steps) {
    const CompiledAtom& atom = rule.atoms[step.atom];
    if (step.kind == PlanStep::Kind::Join) {
      Relation filtered = filter(instance.relation(atom.relation), atom.pattern);
      current = current ? join(*current, filtered) : std::move(filtered);
    } else {
      current = apply_intensional(*current, atom);
    }
    if (current->size() > limits.materialization)
      throw LimitError("evaluate: intermediate result of " +
                       std::to_string(current->size()) +
                       " tuples exceeds the materialization limit");
  }

  if (!current) throw QueryError("plan has no steps");
  IndexSet head;
  head.reserve(rule.head_vars.size());
  for (const std::string& v : rule.head_vars) head.push_back(Index::name(v));
  head = make_index_set(std::move(head));
  return project(*current, head);
}

std::string explain(const Plan& plan) {
  std::ostringstream out;
  bool first = true;
  for (const PlanStep& step : plan.steps) {
    const CompiledAtom& atom = plan.rule.atoms[step.atom];
    std::ostringstream args;
    for (std::size_t k = 0; k < atom.pattern.entries().size(); ++k) {
      if (k > 0) args << ", ";
      args << to_string(atom.pattern.entries()[k].first) << ": "
           << atom.pattern.entries()[k].second;
    }
    if (step.kind == PlanStep::Kind::Join) {
      out << (first ? "scan " : "join ") << atom.relation << "(" << args.str()
          << ")  [" << plan.filtered_sizes.at(step.atom) << " tuples]\n";
      first = false;
    } else {
      out << "apply " << atom.relation << "(" << args.str() << ")\n";
    }
  }
  out << "project (";
  for (std::size_t k = 0; k < plan.rule.head_vars.size(); ++k) {
    if (k > 0) out << ", ";
    out << plan.rule.head_vars[k];
  }
  out << ")\n";
  return out.str();
}

}  // namespace relkit
