#pragma once

// Compression-based stand-ins for algorithmic information content.
//
// K-hat(x) is the byte length of x under a deterministic lossless compressor.
// It is an upper bound on the true (uncomputable) complexity, up to an
// additive constant. Conditional complexity and the information distance are
// derived from it by the usual concatenation approximation.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace poad::infodist {

/// Arbitrary octets. std::string is used purely as a byte container.
using Bytes = std::string;
using Complexity = std::size_t;

class Compressor {
public:
    virtual ~Compressor() = default;
    virtual std::string_view name() const noexcept = 0;
    virtual Bytes compress(std::string_view input) const = 0;
    /// Throws Error(CorruptStream) on malformed input.
    virtual Bytes decompress(std::string_view stream) const = 0;
};

/// LZ78 with LEB128 phrase indices.
///
/// The input is parsed left to right into phrases. Each phrase is the longest
/// prefix of the remaining input already in the phrase table, extended by one
/// literal octet, and is added to the table under the next index (1-based;
/// index 0 is the empty phrase). Each phrase is emitted as
/// LEB128(prefix index) followed by the literal. When the input ends inside a
/// tabled prefix, a final bare LEB128(index) is emitted without a literal.
class Lz78b final : public Compressor {
public:
    std::string_view name() const noexcept override { return "lz78b"; }
    Bytes compress(std::string_view input) const override;
    Bytes decompress(std::string_view stream) const override;
};

/// Identity transform. Only useful as a reference point for comparisons.
class Stored final : public Compressor {
public:
    std::string_view name() const noexcept override { return "stored"; }
    Bytes compress(std::string_view input) const override { return Bytes(input); }
    Bytes decompress(std::string_view stream) const override { return Bytes(stream); }
};

/// Name-keyed lookup of the built-in compressors. Throws UnknownCompressor.
const Compressor& compressor(std::string_view name);
std::vector<std::string_view> compressor_names();

/// The baseline every reported number is pinned to.
const Compressor& baseline();

void append_leb128(Bytes& out, std::size_t value);
/// Reads one unsigned LEB128 value at pos and advances pos.
/// Throws CorruptStream on truncation or overflow.
std::size_t read_leb128(std::string_view in, std::size_t& pos);

Bytes compress(std::string_view x);
Bytes decompress(std::string_view stream);

Complexity khat(std::string_view x, const Compressor& c = baseline());

/// max(K(y ++ x) - K(y), 0)
Complexity khat_cond(std::string_view x, std::string_view y, const Compressor& c = baseline());

/// Information distance: K(x|y) + K(y|x).
Complexity mu(std::string_view x, std::string_view y, const Compressor& c = baseline());

/// Normalized compression distance, averaged over both concatenation orders
/// so that it is exactly symmetric. Not clamped to [0, 1].
/// Throws BothEmpty when both inputs are empty.
double ncd(std::string_view x, std::string_view y, const Compressor& c = baseline());

}  // namespace poad::infodist
