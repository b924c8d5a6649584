#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "swa/param_store.hpp"
#include "swa/tensor.hpp"

namespace swa {

using NodeId = std::size_t;

/// Eager computation tape. Operations append nodes whose values are computed
/// immediately; backward() replays the tape in reverse, accumulating gradients
/// into node slots and finally into the bound ParamStore entries.
///
/// Creation order is a valid topological order because every op may only
/// reference previously created nodes.
class Graph {
public:
    using BackwardFn = std::function<void(Graph&, NodeId self)>;

    NodeId constant(Tensor value);
    /// Leaf bound to a ParamStore entry; after backward() the entry's gradient
    /// slot receives the accumulated gradient.
    NodeId param(ParamStore& store, const std::string& name);

    /// Appends an op node. `parents` is informational (kept for debugging);
    /// the backward closure does the actual gradient routing.
    NodeId emplace(Tensor value, BackwardFn bwd);

    const Tensor& value(NodeId id) const { return nodes_[id].value; }
    Tensor& value_mut(NodeId id) { return nodes_[id].value; }

    /// Gradient slot, zero-initialised on first access.
    Tensor& grad(NodeId id);
    bool has_grad(NodeId id) const { return nodes_[id].grad_ready; }

    std::size_t node_count() const { return nodes_.size(); }

    /// Reverse pass from `root` seeded with `seed` (shape must match).
    /// May be called once per graph; param gradients are accumulated (+=)
    /// into their stores.
    void backward(NodeId root, const Tensor& seed);
    /// Convenience for scalar roots: seed = [1].
    void backward(NodeId root);

    bool backward_done() const { return backward_done_; }

private:
    struct NodeRec {
        Tensor value;
        Tensor grad;
        bool grad_ready = false;
        BackwardFn bwd;           // empty for leaves
        ParamStore* store = nullptr;
        std::string param_name;   // set for param leaves
    };
    std::vector<NodeRec> nodes_;
    bool backward_done_ = false;
};

} // namespace swa
