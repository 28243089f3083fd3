#include "idealclose/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace idealclose {

int RingDescriptor::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

std::string RingDescriptor::field_label() const {
    return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
}

std::string RingDescriptor::describe() const {
    std::ostringstream os;
    os << "poly(" << field_label() << "; ";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) os << ", ";
        os << vars[i];
    }
    if (!quotient.empty()) {
        os << " | ";
        for (std::size_t i = 0; i < quotient.size(); ++i) {
            if (i) os << ", ";
            os << quotient[i].to_string();
        }
    }
    os << ")";
    return os.str();
}

namespace {

bool is_small_prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 16)) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

RingPtr make_poly_ring(std::uint32_t characteristic, std::vector<std::string> vars,
                       MonomialOrder order) {
    if (characteristic != 0 && !is_small_prime(characteristic))
        throw domain_error("characteristic must be 0 or a prime below 2^16");
    if (vars.empty()) throw domain_error("a ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw domain_error("duplicate variable name: " + vars[i]);
    auto r = std::make_shared<RingDescriptor>();
    r->characteristic = characteristic;
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->characteristic != b->characteristic || a->vars != b->vars || !(a->order == b->order))
        return false;
    if (a->quotient.size() != b->quotient.size()) return false;
    for (std::size_t i = 0; i < a->quotient.size(); ++i)
        if (a->quotient[i] != b->quotient[i]) return false;
    return true;
}

RingPtr ambient_ring(const RingPtr& r) {
    return r->is_quotient() ? r->ambient : r;
}

Polynomial retag(const Polynomial& f, const RingPtr& ring) {
    if (f.ring() && f.ring()->nvars() != ring->nvars())
        throw ring_mismatch_error("retag requires identical variable layout");
    return Polynomial::from_terms(ring, f.terms());
}

}  // namespace idealclose
