#include "z2norm/perm.hpp"

#include <algorithm>

namespace z2norm {

int Perm4::index() const {
    std::array<int, 4> img{image_[0], image_[1], image_[2], image_[3]};
    std::array<int, 4> p{0, 1, 2, 3};
    int idx = 0;
    do {
        if (p == img) return idx;
        ++idx;
    } while (std::next_permutation(p.begin(), p.end()));
    return -1;
}

Perm4 Perm4::fromIndex(int idx) {
    std::array<int, 4> p{0, 1, 2, 3};
    for (int i = 0; i < idx; ++i) std::next_permutation(p.begin(), p.end());
    return fromImages(p);
}

std::string Perm4::str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
    return s;
}

bool Perm4::parse(std::string_view text, Perm4& out) {
    if (text.size() != 4) return false;
    std::array<int, 4> img{};
    for (int i = 0; i < 4; ++i) {
        if (text[i] < '0' || text[i] > '3') return false;
        img[i] = text[i] - '0';
    }
    Perm4 p = fromImages(img);
    if (!p.isBijective()) return false;
    out = p;
    return true;
}

}  // namespace z2norm
