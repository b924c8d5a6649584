#include "swa/param_store.hpp"

#include <cmath>
#include <stdexcept>

namespace swa {

ParamStore::Entry& ParamStore::add(const std::string& name, std::vector<std::size_t> shape,
                                   bool trainable) {
    if (index_.count(name)) {
        throw std::invalid_argument("param store: duplicate parameter name '" + name + "'");
    }
    index_[name] = entries_.size();
    Entry e;
    e.name = name;
    e.value = Tensor(shape);
    e.grad = Tensor(std::move(shape));
    e.trainable = trainable;
    entries_.push_back(std::move(e));
    return entries_.back();
}

ParamStore::Entry& ParamStore::at(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw std::out_of_range("param store: unknown parameter '" + name + "'");
    }
    return entries_[it->second];
}

const ParamStore::Entry& ParamStore::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw std::out_of_range("param store: unknown parameter '" + name + "'");
    }
    return entries_[it->second];
}

void ParamStore::zero_grads() {
    for (auto& e : entries_) e.grad.fill(0.0);
}

void ParamStore::scale_grads(double s) {
    for (auto& e : entries_)
        for (double& g : e.grad.values()) g *= s;
}

std::size_t ParamStore::total_params() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.value.size();
    return n;
}

void ParamStore::init_uniform(Tensor& t, std::size_t fan_in, Rng& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in == 0 ? 1 : fan_in));
    for (double& v : t.values()) v = rng.uniform(-bound, bound);
}

} // namespace swa
