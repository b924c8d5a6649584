#include "swa/graph.hpp"

#include <stdexcept>

namespace swa {

NodeId Graph::constant(Tensor value) {
    NodeRec rec;
    rec.value = std::move(value);
    nodes_.push_back(std::move(rec));
    return nodes_.size() - 1;
}

NodeId Graph::param(ParamStore& store, const std::string& name) {
    NodeRec rec;
    rec.value = store.at(name).value;
    rec.store = &store;
    rec.param_name = name;
    nodes_.push_back(std::move(rec));
    return nodes_.size() - 1;
}

NodeId Graph::emplace(Tensor value, BackwardFn bwd) {
    NodeRec rec;
    rec.value = std::move(value);
    rec.bwd = std::move(bwd);
    nodes_.push_back(std::move(rec));
    return nodes_.size() - 1;
}

Tensor& Graph::grad(NodeId id) {
    NodeRec& rec = nodes_[id];
    if (!rec.grad_ready) {
        rec.grad = Tensor(rec.value.shape());
        rec.grad_ready = true;
    }
    return rec.grad;
}

void Graph::backward(NodeId root) { backward(root, Tensor::scalar(1.0)); }

void Graph::backward(NodeId root, const Tensor& seed) {
    if (nodes_.empty()) {
        throw std::logic_error("backward: no forward computation recorded");
    }
    if (backward_done_) {
        throw std::logic_error("backward: reverse pass already executed for this graph");
    }
    if (root >= nodes_.size()) {
        throw std::logic_error("backward: root node out of range");
    }
    if (!seed.same_shape(nodes_[root].value)) {
        throw std::invalid_argument("backward: seed shape " + seed.shape_str() +
                                    " does not match output shape " +
                                    nodes_[root].value.shape_str());
    }
    backward_done_ = true;
    grad(root) = seed;
    for (std::size_t i = root + 1; i-- > 0;) {
        NodeRec& rec = nodes_[i];
        if (!rec.grad_ready) continue;   // nothing flowed into this node
        if (rec.bwd) rec.bwd(*this, i);
        if (rec.store != nullptr) {
            Tensor& g = rec.store->grad(rec.param_name);
            const Tensor& local = rec.grad;
            for (std::size_t k = 0; k < local.size(); ++k) g[k] += local[k];
        }
    }
}

} // namespace swa
