#include "qwmc/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qwmc {

int Gate::max_qubit() const {
  int m = target;
  for (int c : controls) m = std::max(m, c);
  return m;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  if (kind == GateKind::Ry || kind == GateKind::Phase) g.angle = -angle;
  return g;
}

Circuit::Circuit(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 0) throw std::invalid_argument("negative qubit count");
}

Circuit& Circuit::add(Gate gate) {
  auto in_range = [&](int q) { return q >= 0 && q < qubit_count_; };
  if (!in_range(gate.target)) {
    throw std::invalid_argument("gate target " + std::to_string(gate.target) + " outside circuit of " +
                                std::to_string(qubit_count_) + " qubits");
  }
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    int c = gate.controls[i];
    if (!in_range(c)) throw std::invalid_argument("control " + std::to_string(c) + " out of range");
    if (c == gate.target) throw std::invalid_argument("control equals target " + std::to_string(c));
    if (std::find(gate.controls.begin(), gate.controls.begin() + static_cast<std::ptrdiff_t>(i), c) !=
        gate.controls.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw std::invalid_argument("repeated control " + std::to_string(c));
    }
  }
  // Unused angles are zeroed so dumps round-trip.
  if (gate.kind != GateKind::Ry && gate.kind != GateKind::Phase) gate.angle = 0.0;
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.qubit_count_ > qubit_count_) {
    throw std::invalid_argument("appended circuit is wider than the target circuit");
  }
  gates_.reserve(gates_.size() + other.gates_.size());
  for (const Gate& g : other.gates_) gates_.push_back(g);
  return *this;
}

Circuit Circuit::adjoint() const {
  Circuit out(qubit_count_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->adjoint());
  return out;
}

Circuit Circuit::widened(int qubit_count) const {
  if (qubit_count < qubit_count_) throw std::invalid_argument("cannot narrow a circuit");
  Circuit out = *this;
  out.qubit_count_ = qubit_count;
  return out;
}

Circuit Circuit::remapped(const std::vector<int>& mapping, int qubit_count) const {
  if (mapping.size() < static_cast<std::size_t>(qubit_count_)) {
    throw std::invalid_argument("qubit mapping shorter than circuit width");
  }
  Circuit out(qubit_count);
  for (const Gate& g : gates_) {
    Gate m = g;
    m.target = mapping[static_cast<std::size_t>(g.target)];
    for (int& c : m.controls) c = mapping[static_cast<std::size_t>(c)];
    out.add(std::move(m));
  }
  return out;
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Ry: return "RY";
    case GateKind::Z: return "Z";
    case GateKind::Phase: return "PHASE";
  }
  return "?";
}

std::string dump_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "QUBITS " << circuit.qubit_count() << '\n';
  char buf[32];
  for (const Gate& g : circuit.gates()) {
    out << "GATE " << to_string(g.kind) << ' ' << g.target << " [";
    for (std::size_t i = 0; i < g.controls.size(); ++i) out << (i ? "," : "") << g.controls[i];
    out << ']';
    if (g.kind == GateKind::Ry || g.kind == GateKind::Phase) {
      std::snprintf(buf, sizeof buf, "%.17g", g.angle);
      out << ' ' << buf;
    }
    out << '\n';
  }
  return out.str();
}

Circuit parse_circuit_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  Circuit circuit;
  bool have_header = false;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "QUBITS") {
      int q = -1;
      if (have_header || !(ls >> q) || q < 0) fail("bad QUBITS header");
      circuit = Circuit(q);
      have_header = true;
      continue;
    }
    if (word != "GATE" || !have_header) fail("expected GATE after QUBITS header");
    std::string kind_name, controls_text;
    int target = -1;
    if (!(ls >> kind_name >> target >> controls_text)) fail("truncated gate");
    Gate g;
    if (kind_name == "X") g.kind = GateKind::X;
    else if (kind_name == "H") g.kind = GateKind::H;
    else if (kind_name == "RY") g.kind = GateKind::Ry;
    else if (kind_name == "Z") g.kind = GateKind::Z;
    else if (kind_name == "PHASE") g.kind = GateKind::Phase;
    else fail("unknown gate kind " + kind_name);
    g.target = target;
    if (controls_text.size() < 2 || controls_text.front() != '[' || controls_text.back() != ']') {
      fail("controls must be bracketed");
    }
    std::string inner = controls_text.substr(1, controls_text.size() - 2);
    std::istringstream cs(inner);
    std::string item;
    while (std::getline(cs, item, ',')) {
      try {
        g.controls.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail("bad control '" + item + "'");
      }
    }
    if (g.kind == GateKind::Ry || g.kind == GateKind::Phase) {
      std::string angle;
      if (!(ls >> angle)) fail("missing angle");
      g.angle = std::strtod(angle.c_str(), nullptr);
    }
    try {
      circuit.add(std::move(g));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (!have_header) throw std::invalid_argument("circuit dump has no QUBITS header");
  return circuit;
}

}  // namespace qwmc
