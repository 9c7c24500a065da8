#include "commaforge/dot.hpp"

#include <sstream>
#include <unordered_map>

namespace commaforge {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_dot(const FiniteCategory& cat, const DotOptions& opts) {
  std::ostringstream os;
  os << "digraph \"" << escape(cat.name()) << "\" {\n";
  std::unordered_map<ObjId, std::size_t> node;
  for (std::size_t i = 0; i < cat.objects().size(); ++i) {
    const ObjId& a = cat.objects()[i];
    node[a] = i;
    os << "  N" << i << " [label=\"" << escape(a) << "\"];\n";
  }
  for (const ArrId& f : cat.arrows()) {
    if (cat.is_identity(f) && !opts.include_identities) continue;
    os << "  N" << node.at(cat.dom(f)) << " -> N" << node.at(cat.cod(f)) << " [label=\""
       << escape(f) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace commaforge
