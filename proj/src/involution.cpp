#include "sects/clan.hpp"
#include "sects/error.hpp"

#include <numeric>

namespace sects {

Involution::Involution(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    for (int i = 1; i <= n; ++i) {
        const int image = images_[static_cast<std::size_t>(i - 1)];
        if (image < 1 || image > n || images_[static_cast<std::size_t>(image - 1)] != i)
            throw Error(ErrorCode::NotAnInvolution,
                        "one-line word is not a self-inverse permutation of 1.." + std::to_string(n));
    }
}

Involution Involution::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Involution(std::move(images));
}

std::string Involution::one_line() const {
    std::string out;
    const bool wide = size() >= 10;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (wide && i > 0)
            out += ' ';
        out += std::to_string(images_[i]);
    }
    return out;
}

std::string Involution::cycles() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        const int j = (*this)(i);
        if (i < j)
            out += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
    }
    return out.empty() ? "()" : out;
}

IntMatrix Involution::matrix() const {
    IntMatrix m = IntMatrix::Zero(size(), size());
    for (int i = 1; i <= size(); ++i)
        m(i - 1, (*this)(i) - 1) = 1;
    return m;
}

} // namespace sects
