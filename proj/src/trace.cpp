#include <numeric>

#include "bhr/composition.hpp"
#include "bhr/error.hpp"
#include "bhr/solver.hpp"

namespace bhr {

Trace TraceNode::make_catalog(std::string id, int param) {
  auto n = std::make_shared<TraceNode>();
  n->kind = Kind::catalog;
  n->id = std::move(id);
  n->param = param;
  return n;
}

Trace TraceNode::make_ones(int count) {
  auto n = std::make_shared<TraceNode>();
  n->kind = Kind::ones;
  n->count = count;
  return n;
}

Trace TraceNode::make_compose(std::string rule, Trace left, Trace right) {
  auto n = std::make_shared<TraceNode>();
  n->kind = Kind::compose;
  n->rule = std::move(rule);
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

Trace TraceNode::make_search(std::string list, Mode mode, bool perfect, std::uint64_t budget,
                             std::uint64_t nodes) {
  auto n = std::make_shared<TraceNode>();
  n->kind = Kind::search;
  n->list = std::move(list);
  n->mode = mode;
  n->perfect = perfect;
  n->budget = budget;
  n->nodes = nodes;
  return n;
}

Trace TraceNode::make_bridge(Trace inner) {
  auto n = std::make_shared<TraceNode>();
  n->kind = Kind::bridge;
  n->inner = std::move(inner);
  return n;
}

std::string_view to_string(TraceNode::Kind kind) {
  switch (kind) {
    case TraceNode::Kind::catalog: return "catalog";
    case TraceNode::Kind::ones: return "ones";
    case TraceNode::Kind::compose: return "compose";
    case TraceNode::Kind::search: return "search";
    case TraceNode::Kind::bridge: return "bridge";
  }
  return "?";
}

PathRealization replay(const TraceNode& t, const Catalog& catalog) {
  switch (t.kind) {
    case TraceNode::Kind::catalog: {
      const FamilyTemplate* family = catalog.find(t.id);
      if (!family) throw Error("trace refers to unknown catalog entry " + t.id);
      return instantiate(*family, t.param);
    }
    case TraceNode::Kind::ones: {
      std::vector<int> v(static_cast<std::size_t>(t.count) + 1);
      std::iota(v.begin(), v.end(), 0);
      return PathRealization(std::move(v));
    }
    case TraceNode::Kind::compose:
      if (!t.left || !t.right) throw Error("compose step without operands");
      return compose(replay(*t.left, catalog), replay(*t.right, catalog));
    case TraceNode::Kind::search: {
      SearchConfig config;
      config.mode = t.mode;
      config.perfect = t.perfect;
      config.budget = t.budget;
      auto outcome = search(EdgeLengthList::parse(t.list), config);
      if (!outcome.found) throw Error("replayed search for " + t.list + " found nothing");
      return *outcome.found;
    }
    case TraceNode::Kind::bridge:
      if (!t.inner) throw Error("bridge step without an inner trace");
      return replay(*t.inner, catalog);
  }
  throw Error("unknown trace step");
}

namespace {

void collect(const TraceNode& t, std::vector<std::string>& out) {
  switch (t.kind) {
    case TraceNode::Kind::catalog:
      out.push_back("catalog " + t.id + " at " + std::to_string(t.param));
      break;
    case TraceNode::Kind::ones:
      out.push_back("ones " + std::to_string(t.count));
      break;
    case TraceNode::Kind::compose:
      collect(*t.left, out);
      collect(*t.right, out);
      out.push_back("compose " + t.rule);
      break;
    case TraceNode::Kind::search:
      out.push_back("search " + std::string(to_string(t.mode)) + (t.perfect ? " perfect" : "") + " {" + t.list +
                    "} nodes " + std::to_string(t.nodes));
      break;
    case TraceNode::Kind::bridge:
      collect(*t.inner, out);
      out.push_back("bridge linear to cyclic");
      break;
  }
}

}  // namespace

std::vector<std::string> trace_steps(const TraceNode& trace) {
  std::vector<std::string> out;
  collect(trace, out);
  return out;
}

}  // namespace bhr
