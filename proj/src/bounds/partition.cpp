#include "autbound/bounds/partition.hpp"

#include "autbound/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace autbound {

Partition::Partition(std::vector<int> blocks) : blocks_(std::move(blocks))
{
    for (int b : blocks_) {
        if (b <= 0) throw InvalidInput("partition blocks must be positive");
    }
    std::sort(blocks_.begin(), blocks_.end(), std::greater<>());
    n_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(n, 1)); }

Partition Partition::parse(std::string_view text)
{
    std::vector<int> blocks;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw MalformedInput("bad partition '" + std::string(text) + "'");
        blocks.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur.push_back(c);
            if (cur.size() > 6) throw MalformedInput("partition block too large");
        } else {
            throw MalformedInput("bad partition '" + std::string(text) + "'");
        }
    }
    flush();
    try {
        return Partition(blocks);
    } catch (const InvalidInput& e) {
        throw MalformedInput(e.what());
    }
}

int Partition::multiplicity(int k) const
{
    return static_cast<int>(std::count(blocks_.begin(), blocks_.end(), k));
}

bool Partition::is_fermat() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](int b) { return b == 1; });
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < blocks_.size();) {
        std::size_t j = i;
        while (j < blocks_.size() && blocks_[j] == blocks_[i]) ++j;
        if (i > 0) out += ",";
        out += std::to_string(blocks_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

std::string Partition::to_list() const
{
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(blocks_[i]);
    }
    return out;
}

Partition concat(const Partition& a, const Partition& b)
{
    std::vector<int> blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    return Partition(blocks);
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        generate(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n)
{
    if (n < 1) throw InvalidInput("partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(n, n, cur, out);
    return out;
}

}  // namespace autbound
