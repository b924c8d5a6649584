#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "swa/rng.hpp"
#include "swa/tensor.hpp"

namespace swa {

/// Named parameter registry. Each entry owns a value tensor and a gradient
/// tensor of identical shape. Iteration follows registration order so that
/// checkpointing and gradient checks are deterministic.
class ParamStore {
public:
    struct Entry {
        std::string name;
        Tensor value;
        Tensor grad;
        bool trainable = true;
    };

    /// Registers a new entry initialised to zeros. Duplicate names are an error.
    Entry& add(const std::string& name, std::vector<std::size_t> shape, bool trainable = true);

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    Entry& at(const std::string& name);
    const Entry& at(const std::string& name) const;

    Tensor& value(const std::string& name) { return at(name).value; }
    const Tensor& value(const std::string& name) const { return at(name).value; }
    Tensor& grad(const std::string& name) { return at(name).grad; }

    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<Entry>& entries() { return entries_; }

    void zero_grads();
    void scale_grads(double s);
    std::size_t total_params() const;

    /// Fills a weight tensor with uniform values in [-1/sqrt(fan_in), +1/sqrt(fan_in)].
    static void init_uniform(Tensor& t, std::size_t fan_in, Rng& rng);

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace swa
