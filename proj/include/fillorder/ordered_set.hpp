#pragma once

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

#include <cstddef>
#include <functional>

namespace fillorder {

// Balanced search tree with subtree sizes: O(log n) insert, erase, find,
// rank and select (select(i) is the i-th smallest, 0-based).
template <class Key, class Compare = std::less<Key>>
class OrderedSet {
  using Tree = __gnu_pbds::tree<Key, __gnu_pbds::null_type, Compare, __gnu_pbds::rb_tree_tag,
                                __gnu_pbds::tree_order_statistics_node_update>;

 public:
  using const_iterator = typename Tree::const_iterator;

  bool insert(const Key& k) { return t_.insert(k).second; }
  bool erase(const Key& k) { return t_.erase(k); }
  bool contains(const Key& k) const { return t_.find(k) != t_.end(); }
  std::size_t size() const { return t_.size(); }
  bool empty() const { return t_.empty(); }
  void clear() { t_.clear(); }

  const Key& select(std::size_t i) const { return *t_.find_by_order(i); }
  // Number of elements strictly less than k.
  std::size_t rank(const Key& k) const { return t_.order_of_key(k); }
  const_iterator lower_bound(const Key& k) const { return t_.lower_bound(k); }

  const_iterator begin() const { return t_.begin(); }
  const_iterator end() const { return t_.end(); }
  const Key& front() const { return *t_.begin(); }

  void swap(OrderedSet& o) { t_.swap(o.t_); }

 private:
  Tree t_;
};

}  // namespace fillorder
