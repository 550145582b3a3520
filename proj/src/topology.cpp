#include "bcube/topology.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace bcube {

namespace {

constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 31;

std::uint64_t checked_pow(int base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= static_cast<std::uint64_t>(base);
    if (r > kMaxNodes) throw std::invalid_argument("BCube too large to address");
  }
  return r;
}

}  // namespace

std::uint64_t node_count(Dims dims) {
  if (dims.n < 2 || dims.k < 0) throw std::invalid_argument("BCube requires n >= 2 and k >= 0");
  return checked_pow(dims.n, dims.k + 1);
}

std::uint64_t edge_count(Dims dims) {
  const std::uint64_t nodes = node_count(dims);
  return nodes * static_cast<std::uint64_t>(dims.n - 1) * static_cast<std::uint64_t>(dims.k + 1) / 2;
}

BCube::BCube(Dims dims) : dims_(dims) {
  if (dims.n < 2 || dims.k < 0) throw std::invalid_argument("BCube requires n >= 2 and k >= 0");
  pow_.resize(dims.k + 2);
  pow_[0] = 1;
  for (int i = 1; i <= dims.k + 1; ++i) {
    const std::uint64_t next = std::uint64_t{pow_[i - 1]} * static_cast<std::uint64_t>(dims.n);
    if (next > kMaxNodes) throw std::invalid_argument("BCube too large to address");
    pow_[i] = static_cast<std::uint32_t>(next);
  }
}

void BCube::check_dim(int i) const {
  if (i < 0 || i > dims_.k) throw std::out_of_range("dimension " + std::to_string(i) + " out of range");
}

void BCube::check_label(int label) const {
  if (label < 0 || label >= dims_.n) throw std::out_of_range("label " + std::to_string(label) + " out of range");
}

NodeId BCube::node(std::uint32_t code) const {
  if (code >= pow_.back()) throw std::out_of_range("node code out of range");
  return NodeId{code};
}

NodeId BCube::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != dimensions()) throw std::invalid_argument("wrong number of digits");
  std::uint32_t code = 0;
  for (int d : digits) {
    if (d < 0 || d >= dims_.n) throw std::invalid_argument("digit out of range");
    code = code * static_cast<std::uint32_t>(dims_.n) + static_cast<std::uint32_t>(d);
  }
  return NodeId{code};
}

std::vector<int> BCube::digits(NodeId u) const {
  std::vector<int> out(dimensions());
  for (int i = 0; i <= dims_.k; ++i) out[dims_.k - i] = digit(u, i);
  return out;
}

NodeId BCube::with_digit(NodeId u, int i, int value) const {
  const int old = digit(u, i);
  const std::int64_t delta = static_cast<std::int64_t>(value - old) * pow_[i];
  return NodeId{static_cast<std::uint32_t>(static_cast<std::int64_t>(u.code) + delta)};
}

int BCube::edge_dimension(NodeId u, NodeId v) const {
  int dim = -1;
  for (int i = 0; i <= dims_.k; ++i) {
    if (digit(u, i) != digit(v, i)) {
      if (dim >= 0) return -1;
      dim = i;
    }
  }
  return dim;
}

bool BCube::are_adjacent(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) throw std::out_of_range("node does not belong to this BCube");
  return edge_dimension(u, v) >= 0;
}

Edge BCube::edge(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) throw std::invalid_argument("edge endpoint outside BCube");
  const int dim = edge_dimension(u, v);
  if (dim < 0) throw std::invalid_argument(format(u) + " and " + format(v) + " are not adjacent");
  return u < v ? Edge{u, v, dim} : Edge{v, u, dim};
}

std::vector<NodeId> BCube::neighbors(NodeId u) const {
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(dims_.n - 1) * dimensions());
  for (int i = 0; i <= dims_.k; ++i) {
    const int own = digit(u, i);
    for (int a = 0; a < dims_.n; ++a)
      if (a != own) out.push_back(with_digit(u, i, a));
  }
  return out;
}

std::vector<Edge> BCube::dimension_edges(int i) const {
  check_dim(i);
  std::vector<Edge> out;
  out.reserve(node_count() * static_cast<std::uint64_t>(dims_.n - 1) / 2);
  for (std::uint32_t c = 0; c < pow_.back(); ++c) {
    const NodeId u{c};
    const int own = digit(u, i);
    for (int a = own + 1; a < dims_.n; ++a) out.push_back(Edge{u, with_digit(u, i, a), i});
  }
  return out;
}

std::vector<Edge> BCube::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i <= dims_.k; ++i) {
    auto e = dimension_edges(i);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

NodeId BCube::cross_neighbor(NodeId u, int split_dim, int label) const {
  check_dim(split_dim);
  check_label(label);
  if (digit(u, split_dim) == label) throw std::invalid_argument("node already lies in the target subgraph");
  return with_digit(u, split_dim, label);
}

std::vector<Edge> BCube::cross_edges(int l1, int l2, int split_dim) const {
  check_dim(split_dim);
  check_label(l1);
  check_label(l2);
  if (l1 == l2) throw std::invalid_argument("cross edges need two distinct labels");
  std::vector<Edge> out;
  for (NodeId u : subgraph_nodes(split_dim, l1)) out.push_back(edge(u, with_digit(u, split_dim, l2)));
  return out;
}

std::vector<NodeId> BCube::subgraph_nodes(int split_dim, int label) const {
  check_dim(split_dim);
  check_label(label);
  std::vector<NodeId> out;
  out.reserve(pow_.back() / dims_.n);
  const std::uint32_t low = pow_[split_dim];
  const std::uint32_t high = pow_.back() / pow_[split_dim + 1];
  for (std::uint32_t h = 0; h < high; ++h)
    for (std::uint32_t l = 0; l < low; ++l)
      out.push_back(NodeId{h * pow_[split_dim + 1] + static_cast<std::uint32_t>(label) * low + l});
  return out;
}

std::string BCube::format(NodeId u) const {
  std::string out;
  for (int i = dims_.k; i >= 0; --i) {
    const int d = digit(u, i);
    if (dims_.n <= 10) {
      out.push_back(static_cast<char>('0' + d));
    } else {
      if (i != dims_.k) out.push_back(',');
      out += std::to_string(d);
    }
  }
  return out;
}

NodeId BCube::parse(std::string_view text) const {
  std::vector<int> ds;
  if (text.find(',') != std::string_view::npos || dims_.n > 10) {
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed node string '" + std::string(text) + "'");
      ds.push_back(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed node string '" + std::string(text) + "'");
      ds.push_back(c - '0');
    }
  }
  if (static_cast<int>(ds.size()) != dimensions())
    throw std::invalid_argument("node string '" + std::string(text) + "' needs " + std::to_string(dimensions()) +
                                " digits");
  return from_digits(ds);
}

SubgraphProjection::SubgraphProjection(const BCube& parent, int split_dim, int label)
    : parent_(parent),
      sub_(Dims{parent.radix(), parent.level() >= 1 ? parent.level() - 1 : 0}),
      split_dim_(split_dim),
      label_(label) {
  if (parent.level() < 1) throw std::invalid_argument("BC(n,0) has no proper subgraph partition");
  if (split_dim < 0 || split_dim > parent.level()) throw std::out_of_range("split dimension out of range");
  if (label < 0 || label >= parent.radix()) throw std::out_of_range("label out of range");
}

NodeId SubgraphProjection::to_sub(NodeId u) const {
  const std::uint32_t low = parent_.power(split_dim_);
  const std::uint32_t high = parent_.power(split_dim_ + 1);
  return NodeId{(u.code / high) * low + u.code % low};
}

NodeId SubgraphProjection::to_parent(NodeId u) const {
  const std::uint32_t low = parent_.power(split_dim_);
  const std::uint32_t high = parent_.power(split_dim_ + 1);
  return NodeId{(u.code / low) * high + static_cast<std::uint32_t>(label_) * low + u.code % low};
}

std::string to_dot(const BCube& bc) {
  static constexpr const char* kPalette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan"};
  std::ostringstream out;
  out << "graph \"BC(" << bc.radix() << "," << bc.level() << ")\" {\n";
  for (std::uint32_t c = 0; c < bc.node_count(); ++c) out << "  \"" << bc.format(NodeId{c}) << "\";\n";
  for (const Edge& e : bc.edges()) {
    out << "  \"" << bc.format(e.u) << "\" -- \"" << bc.format(e.v) << "\" [dim=" << e.dim << ", color=\""
        << kPalette[e.dim % std::size(kPalette)] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bcube
