#ifndef GGT_FINITE_GROUP_HPP
#define GGT_FINITE_GROUP_HPP

#include <string>
#include <vector>

namespace ggt {

// A finite group given by its multiplication table.  Elements are indices
// 0..order-1.  Construction validates the table: closure, identity, inverses,
// and associativity (exhaustive up to order 256, randomized sampling above).
//
// These groups stand in for the compact open subgroups of a TDLC group: all
// graph constructions downstream are purely combinatorial, so a finite group
// with its coset combinatorics carries everything we need at this scale.
class FiniteGroup {
 public:
  // Throws NotClosed / NoIdentity / NoInverse / NotAssociative, each naming
  // a witness element or triple.
  static FiniteGroup validate(const std::vector<std::vector<int>>& table,
                              std::vector<std::string> element_names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int op(int a, int b) const { return mult_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  const std::string& name_of(int a) const { return element_names_[a]; }
  const std::vector<std::string>& element_names() const { return element_names_; }

  // Order of the cyclic subgroup generated by a.
  int element_order(int a) const;

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && mult_ == other.mult_;
  }

  // Presets.
  static FiniteGroup cyclic(int n);       // Z/n
  static FiniteGroup symmetric3();        // S3, order 6
  static FiniteGroup dihedral4();         // D4, order 8
  static FiniteGroup klein4();            // Z/2 x Z/2
  static FiniteGroup trivial() { return cyclic(1); }

  FiniteGroup() = default;  // empty; assign from validate()/presets before use

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mult_;  // row-major order x order
  std::vector<int> inv_;
  std::vector<std::string> element_names_;
};

// Checks that `elements` is a subgroup of G (contains identity, closed under
// multiplication and inverse).  Throws NotASubgroup with a witness.
void check_subgroup(const FiniteGroup& G, const std::vector<int>& elements);

// Left-coset transversal of the subgroup H (given by its element list) in V.
// One representative per coset: the identity for H itself, the index-minimal
// element for every other coset.  Ordered by representative index.
std::vector<int> transversal(const std::vector<int>& subgroup_elements,
                             const FiniteGroup& V);

// An injective homomorphism between finite groups, stored as the image table.
// Validation is exhaustive.
class Monomorphism {
 public:
  // Throws NotInjectiveHom / NotAHomomorphism.
  static Monomorphism validate(const FiniteGroup& source, const FiniteGroup& target,
                               std::vector<int> image);

  int apply(int a) const { return image_[a]; }
  const std::vector<int>& image() const { return image_; }
  // Preimage of a target element, or -1 if not in the image.
  int preimage(int b) const;
  bool in_image(int b) const { return preimage(b) >= 0; }

  Monomorphism() = default;  // empty; assign from validate() before use

 private:
  std::vector<int> image_;
  std::vector<int> preimage_;  // target order sized, -1 outside the image
};

}  // namespace ggt

#endif
