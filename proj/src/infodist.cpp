#include "poad/infodist.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "poad/error.hpp"

namespace poad::infodist {

namespace {

// Phrase-table trie edge key: (parent index, next octet).
std::uint64_t edge_key(std::size_t parent, unsigned char octet) {
    return (static_cast<std::uint64_t>(parent) << 8) | octet;
}

}  // namespace

void append_leb128(Bytes& out, std::size_t value) {
    do {
        unsigned char byte = value & 0x7f;
        value >>= 7;
        if (value != 0) byte |= 0x80;
        out.push_back(static_cast<char>(byte));
    } while (value != 0);
}

std::size_t read_leb128(std::string_view in, std::size_t& pos) {
    std::size_t value = 0;
    unsigned shift = 0;
    while (true) {
        if (pos >= in.size()) throw Error(ErrorKind::CorruptStream, "truncated LEB128 index");
        const auto byte = static_cast<unsigned char>(in[pos++]);
        if (shift >= 64 || (shift == 63 && (byte & 0x7e) != 0))
            throw Error(ErrorKind::CorruptStream, "LEB128 index overflows 64 bits");
        value |= static_cast<std::size_t>(byte & 0x7f) << shift;
        if ((byte & 0x80) == 0) return value;
        shift += 7;
    }
}

Bytes Lz78b::compress(std::string_view input) const {
    Bytes out;
    std::unordered_map<std::uint64_t, std::size_t> table;
    table.reserve(input.size() / 2 + 1);
    std::size_t next_index = 1;
    std::size_t node = 0;
    for (const char ch : input) {
        const auto octet = static_cast<unsigned char>(ch);
        const auto it = table.find(edge_key(node, octet));
        if (it != table.end()) {
            node = it->second;
            continue;
        }
        append_leb128(out, node);
        out.push_back(ch);
        table.emplace(edge_key(node, octet), next_index++);
        node = 0;
    }
    if (node != 0) append_leb128(out, node);
    return out;
}

Bytes Lz78b::decompress(std::string_view stream) const {
    // phrases[i] = (prefix index, literal); phrase 0 is empty.
    std::vector<std::pair<std::size_t, char>> phrases(1);
    Bytes out;
    std::string scratch;
    auto emit = [&](std::size_t index) {
        scratch.clear();
        while (index != 0) {
            scratch.push_back(phrases[index].second);
            index = phrases[index].first;
        }
        out.append(scratch.rbegin(), scratch.rend());
    };
    std::size_t pos = 0;
    while (pos < stream.size()) {
        const std::size_t index = read_leb128(stream, pos);
        if (index >= phrases.size())
            throw Error(ErrorKind::CorruptStream, "phrase index " + std::to_string(index) + " not yet defined");
        emit(index);
        if (pos == stream.size()) {
            if (index == 0) throw Error(ErrorKind::CorruptStream, "bare token must reference a phrase");
            break;
        }
        const char literal = stream[pos++];
        out.push_back(literal);
        phrases.emplace_back(index, literal);
    }
    return out;
}

const Compressor& compressor(std::string_view name) {
    static const Lz78b lz78b;
    static const Stored stored;
    if (name == lz78b.name()) return lz78b;
    if (name == stored.name()) return stored;
    throw Error(ErrorKind::UnknownCompressor, std::string(name));
}

std::vector<std::string_view> compressor_names() { return {"lz78b", "stored"}; }

const Compressor& baseline() { return compressor("lz78b"); }

Bytes compress(std::string_view x) { return baseline().compress(x); }
Bytes decompress(std::string_view stream) { return baseline().decompress(stream); }

Complexity khat(std::string_view x, const Compressor& c) { return c.compress(x).size(); }

Complexity khat_cond(std::string_view x, std::string_view y, const Compressor& c) {
    Bytes joined;
    joined.reserve(x.size() + y.size());
    joined.append(y).append(x);
    const Complexity both = khat(joined, c);
    const Complexity given = khat(y, c);
    return both > given ? both - given : 0;
}

Complexity mu(std::string_view x, std::string_view y, const Compressor& c) {
    return khat_cond(x, y, c) + khat_cond(y, x, c);
}

double ncd(std::string_view x, std::string_view y, const Compressor& c) {
    if (x.empty() && y.empty()) throw Error(ErrorKind::BothEmpty, "ncd of two empty strings is undefined");
    const auto kx = static_cast<double>(khat(x, c));
    const auto ky = static_cast<double>(khat(y, c));
    Bytes xy(x);
    xy.append(y);
    Bytes yx(y);
    yx.append(x);
    const double joint = 0.5 * (static_cast<double>(khat(xy, c)) + static_cast<double>(khat(yx, c)));
    return (joint - std::min(kx, ky)) / std::max(kx, ky);
}

}  // namespace poad::infodist
