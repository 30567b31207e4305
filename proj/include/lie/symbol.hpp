#pragma once

#include <memory>
#include <string>

namespace lie {

struct AtomData;

// Indeterminates of the polynomial engine. Chart variables x1..xn and named
// family parameters are plain symbols; transcendental/opaque subexpressions
// (exp, sin, pow, phi', ...) enter as Atom symbols whose payload lives in
// AtomData. Total order: variables < parameters < atoms.
class Symbol {
 public:
  enum class Kind : uint8_t { Variable, Parameter, Atom };

  static Symbol variable(int index);
  static Symbol parameter(std::string name);
  static Symbol atom(std::shared_ptr<const AtomData> data);

  Kind kind() const { return kind_; }
  int var_index() const { return var_; }
  const std::string& param_name() const { return name_; }
  const AtomData& atom_data() const { return *atom_; }
  const std::shared_ptr<const AtomData>& atom_ptr() const { return atom_; }

  bool operator==(const Symbol& o) const;
  bool operator<(const Symbol& o) const;

 private:
  Kind kind_ = Kind::Variable;
  int var_ = 0;
  std::string name_;
  std::shared_ptr<const AtomData> atom_;
};

// Three-way compare; defined with the atom machinery.
int symbol_cmp(const Symbol& a, const Symbol& b);

inline bool Symbol::operator==(const Symbol& o) const { return symbol_cmp(*this, o) == 0; }
inline bool Symbol::operator<(const Symbol& o) const { return symbol_cmp(*this, o) < 0; }

}  // namespace lie
