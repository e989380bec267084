#pragma once

#include "autbound/groups/modp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace autbound {

/// Breadth-first enumeration of the group generated by matrices over F_p.
/// Each element records its BFS parent and the generator that reached it,
/// so element i = element(parent(i)) * generator(i).
class ModpClosure {
public:
    static constexpr std::uint32_t kRoot = 0xffffffffu;

    /// Throws CapExceeded when more than `cap` elements appear.
    ModpClosure(const ModpSpace& space, std::vector<std::vector<std::uint32_t>> gens, std::uint64_t cap);

    [[nodiscard]] std::size_t size() const { return parent_.size(); }
    [[nodiscard]] const std::uint32_t* element(std::size_t i) const { return pool_.data() + i * space_.size(); }
    [[nodiscard]] std::uint32_t parent(std::size_t i) const { return parent_[i]; }
    [[nodiscard]] std::uint32_t generator(std::size_t i) const { return gen_[i]; }
    [[nodiscard]] std::optional<std::size_t> find(const std::uint32_t* a) const;
    [[nodiscard]] bool contains(const std::vector<std::uint32_t>& a) const { return find(a.data()).has_value(); }
    [[nodiscard]] const ModpSpace& space() const { return space_; }

private:
    bool insert(const std::uint32_t* a, std::uint32_t parent, std::uint32_t gen);
    void grow();

    ModpSpace space_;
    std::vector<std::uint32_t> pool_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> gen_;
    std::vector<std::uint32_t> slots_;
    std::uint64_t mask_ = 0;
};

}  // namespace autbound
