#include "subsetsums/group.hpp"

#include <sstream>
#include <stdexcept>

namespace subsetsums {

GroupSpec::GroupSpec(std::vector<std::uint32_t> orders, std::uint64_t max_order)
    : orders_(std::move(orders)), n_(1) {
    for (std::uint32_t d : orders_) {
        if (d < 2) {
            throw std::invalid_argument("GroupSpec: cyclic order " + std::to_string(d) +
                                        " < 2 is not allowed");
        }
        n_ *= d;
        if (n_ > max_order) {
            throw std::invalid_argument("GroupSpec: group order exceeds the limit of " +
                                        std::to_string(max_order));
        }
    }
}

GroupSpec GroupSpec::parse(const std::string& text, std::uint64_t max_order) {
    std::vector<std::uint32_t> orders;
    std::string token;
    std::istringstream in(text);
    if (!text.empty()) {
        while (std::getline(in, token, ',')) {
            // tolerate surrounding spaces, nothing else
            std::size_t b = token.find_first_not_of(' ');
            std::size_t e = token.find_last_not_of(' ');
            if (b == std::string::npos) {
                throw std::invalid_argument("GroupSpec: empty factor in \"" + text + "\"");
            }
            token = token.substr(b, e - b + 1);
            std::uint64_t value = 0;
            for (char c : token) {
                if (c < '0' || c > '9') {
                    throw std::invalid_argument("GroupSpec: bad factor \"" + token + "\"");
                }
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
                if (value > max_order) {
                    throw std::invalid_argument("GroupSpec: factor \"" + token +
                                                "\" exceeds the order limit");
                }
            }
            orders.push_back(static_cast<std::uint32_t>(value));
        }
        if (text.back() == ',') {
            throw std::invalid_argument("GroupSpec: trailing comma in \"" + text + "\"");
        }
    }
    return GroupSpec(std::move(orders), max_order);
}

std::string GroupSpec::str() const {
    std::string out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(orders_[i]);
    }
    return out;
}

Element GroupSpec::identity() const {
    return Element{std::vector<std::uint32_t>(orders_.size(), 0)};
}

Element GroupSpec::element(std::uint64_t index) const {
    if (index >= n_) {
        throw std::out_of_range("GroupSpec: element index " + std::to_string(index) +
                                " out of range [0," + std::to_string(n_) + ")");
    }
    Element e{std::vector<std::uint32_t>(orders_.size(), 0)};
    for (std::size_t i = orders_.size(); i-- > 0;) {
        e.residues[i] = static_cast<std::uint32_t>(index % orders_[i]);
        index /= orders_[i];
    }
    return e;
}

std::uint64_t GroupSpec::index(const Element& e) const {
    require_member(e);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        idx = idx * orders_[i] + e.residues[i];
    }
    return idx;
}

std::vector<Element> GroupSpec::all_elements() const {
    std::vector<Element> out;
    out.reserve(n_);
    for (std::uint64_t i = 0; i < n_; ++i) out.push_back(element(i));
    return out;
}

Element GroupSpec::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    Element r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        r.residues[i] = (r.residues[i] + b.residues[i]) % orders_[i];
    }
    return r;
}

Element GroupSpec::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element GroupSpec::neg(const Element& a) const {
    require_member(a);
    Element r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        r.residues[i] = a.residues[i] == 0 ? 0 : orders_[i] - a.residues[i];
    }
    return r;
}

Element GroupSpec::scalar_mul(std::int64_t k, const Element& a) const {
    require_member(a);
    Element r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::uint64_t d = orders_[i];
        const std::uint64_t kk = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(d)) +
                                                             static_cast<std::int64_t>(d)) %
                                                            static_cast<std::int64_t>(d));
        r.residues[i] = static_cast<std::uint32_t>((kk * a.residues[i]) % d);
    }
    return r;
}

Element GroupSpec::total_sum() const {
    // coordinate i sums to (n/d_i) * (0 + 1 + ... + (d_i-1)) mod d_i
    Element r = identity();
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::uint64_t d = orders_[i];
        const std::uint64_t reps = (n_ / d) % d;
        const std::uint64_t tri = (d * (d - 1) / 2) % d;
        r.residues[i] = static_cast<std::uint32_t>((reps * tri) % d);
    }
    return r;
}

std::vector<std::uint64_t> GroupSpec::translation_table(const Element& x) const {
    require_member(x);
    std::vector<std::uint64_t> t(n_);
    for (std::uint64_t i = 0; i < n_; ++i) {
        t[i] = index(add(element(i), x));
    }
    return t;
}

void GroupSpec::require_member(const Element& e) const {
    if (e.residues.size() != orders_.size()) {
        throw std::invalid_argument("GroupSpec: element has " + std::to_string(e.residues.size()) +
                                    " coordinates, group has " + std::to_string(orders_.size()));
    }
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (e.residues[i] >= orders_[i]) {
            throw std::invalid_argument("GroupSpec: residue out of range in coordinate " +
                                        std::to_string(i));
        }
    }
}

}  // namespace subsetsums
