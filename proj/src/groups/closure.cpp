#include "autbound/groups/closure.hpp"

#include "autbound/error.hpp"

#include <cstring>
#include <string>

namespace autbound {

ModpClosure::ModpClosure(const ModpSpace& space, std::vector<std::vector<std::uint32_t>> gens, std::uint64_t cap)
    : space_(space)
{
    slots_.assign(1 << 10, 0);
    mask_ = slots_.size() - 1;
    const auto id = space_.identity();
    insert(id.data(), kRoot, kRoot);
    const std::size_t sz = space_.size();
    std::vector<std::uint32_t> tmp(sz);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::uint32_t g = 0; g < gens.size(); ++g) {
            space_.mul(element(i), gens[g].data(), tmp.data());
            if (insert(tmp.data(), static_cast<std::uint32_t>(i), g) && size() > cap) {
                throw CapExceeded("closure exceeded " + std::to_string(cap) + " elements");
            }
        }
    }
}

std::optional<std::size_t> ModpClosure::find(const std::uint32_t* a) const
{
    const std::size_t sz = space_.size();
    for (std::uint64_t h = space_.hash(a) & mask_;; h = (h + 1) & mask_) {
        const std::uint32_t s = slots_[h];
        if (s == 0) return std::nullopt;
        if (std::memcmp(pool_.data() + (s - 1) * sz, a, sz * sizeof(std::uint32_t)) == 0) return s - 1;
    }
}

bool ModpClosure::insert(const std::uint32_t* a, std::uint32_t parent, std::uint32_t gen)
{
    const std::size_t sz = space_.size();
    std::uint64_t h = space_.hash(a) & mask_;
    for (;; h = (h + 1) & mask_) {
        const std::uint32_t s = slots_[h];
        if (s == 0) break;
        if (std::memcmp(pool_.data() + (s - 1) * sz, a, sz * sizeof(std::uint32_t)) == 0) return false;
    }
    pool_.insert(pool_.end(), a, a + sz);
    parent_.push_back(parent);
    gen_.push_back(gen);
    slots_[h] = static_cast<std::uint32_t>(parent_.size());
    if (parent_.size() * 2 > slots_.size()) grow();
    return true;
}

void ModpClosure::grow()
{
    slots_.assign(slots_.size() * 2, 0);
    mask_ = slots_.size() - 1;
    for (std::size_t i = 0; i < size(); ++i) {
        std::uint64_t h = space_.hash(element(i)) & mask_;
        while (slots_[h] != 0) h = (h + 1) & mask_;
        slots_[h] = static_cast<std::uint32_t>(i + 1);
    }
}

}  // namespace autbound
