#pragma once

// A ring is an ordered list of variable names plus the field characteristic.
// Variable order is fixed at creation; every canonical form (grevlex term
// order, serialization) is relative to it.

#include "binform/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace binform {

struct ring_mismatch : std::invalid_argument {
    ring_mismatch() : std::invalid_argument("polynomials live in different rings") {}
};

class VarSpace {
public:
    VarSpace(std::vector<std::string> names, long long characteristic)
        : names_(std::move(names)), p_(characteristic) {
        check_characteristic(p_);
        for (size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
    }

    int size() const { return static_cast<int>(names_.size()); }
    long long characteristic() const { return p_; }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    bool same_as(const VarSpace& other) const {
        return p_ == other.p_ && names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
    long long p_;
    std::map<std::string, int> index_;
};

using Ring = std::shared_ptr<const VarSpace>;

inline Ring make_ring(std::vector<std::string> names, long long p) {
    return std::make_shared<VarSpace>(std::move(names), p);
}

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->same_as(*b));
}

} // namespace binform
