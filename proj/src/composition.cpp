#include "cgraphs/composition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cgraphs {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) throw std::invalid_argument("composition needs at least 2 parts");
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::k() const {
    require_even(*this);
    return length() / 2;
}

long Composition::vertex_count() const {
    long n = 0;
    for (int p : parts_) n += p;
    return n;
}

int Composition::min_part() const { return *std::min_element(parts_.begin(), parts_.end()); }

int Composition::max_part() const { return *std::max_element(parts_.begin(), parts_.end()); }

void require_even(const Composition& c) {
    if (!c.even_length()) {
        std::ostringstream os;
        os << "composition of length " << c.length() << " is outside C_even (even length required)";
        throw OutsideCEvenError(os.str());
    }
}

namespace {

void gen(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        if (prefix.size() >= 2 && prefix.size() % 2 == 0) out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        gen(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> even_compositions_of(int n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    std::vector<Composition> out;
    std::vector<int> prefix;
    gen(n, prefix, out);
    return out;
}

std::vector<Composition> even_compositions_up_to(int max_n) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    std::vector<Composition> out;
    for (int n = 2; n <= max_n; ++n) {
        auto batch = even_compositions_of(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace cgraphs
