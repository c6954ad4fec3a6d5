// Encoder finite-state machines and their synchronized products.
//
// A Trellis is one sender's machine: per section it consumes
// driving_bits_per_section i.u.d. bits and emits uses_per_section antipodal
// symbols. A JointTrellis is the product machine of two senders whose
// branches carry both senders' symbols.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gifc {

struct polynomial_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Feed-forward generator of a rate-1/n convolutional encoder.
// polynomials[j][k] is the tap of output j on D^k (lowest degree first).
struct GeneratorMatrix {
    std::vector<std::vector<std::uint8_t>> polynomials;

    int memory() const {
        int m = 0;
        for (const auto& p : polynomials)
            for (std::size_t k = 0; k < p.size(); ++k)
                if (p[k]) m = std::max(m, static_cast<int>(k));
        return m;
    }

    void validate() const {
        if (polynomials.empty())
            throw polynomial_error("generator matrix needs at least one polynomial");
        for (const auto& p : polynomials) {
            bool nonzero = false;
            for (auto c : p) {
                if (c > 1) throw polynomial_error("polynomial coefficients must be 0 or 1");
                nonzero = nonzero || c;
            }
            if (!nonzero) throw polynomial_error("all-zero generator polynomial");
        }
    }
};

// Octal form "7,5": bit k of each octal value is the D^k tap.
inline GeneratorMatrix parse_generator_octal(const std::string& text) {
    GeneratorMatrix g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw polynomial_error("empty octal polynomial in \"" + text + "\"");
        std::uint64_t value = 0;
        for (char c : tok) {
            if (c < '0' || c > '7') throw polynomial_error("bad octal digit in \"" + tok + "\"");
            value = value * 8 + static_cast<std::uint64_t>(c - '0');
        }
        if (value == 0) throw polynomial_error("all-zero generator polynomial \"" + tok + "\"");
        std::vector<std::uint8_t> coeffs;
        for (std::uint64_t v = value; v != 0; v >>= 1) coeffs.push_back(static_cast<std::uint8_t>(v & 1));
        g.polynomials.push_back(std::move(coeffs));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    g.validate();
    return g;
}

// Binary form "111,101": characters left to right are the D^0, D^1, ... taps.
inline GeneratorMatrix parse_generator_binary(const std::string& text) {
    GeneratorMatrix g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw polynomial_error("empty binary polynomial in \"" + text + "\"");
        std::vector<std::uint8_t> coeffs;
        for (char c : tok) {
            if (c != '0' && c != '1') throw polynomial_error("bad binary digit in \"" + tok + "\"");
            coeffs.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        g.polynomials.push_back(std::move(coeffs));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    g.validate();
    return g;
}

struct Branch {
    int s_minus = 0;
    int s_plus = 0;
    std::vector<std::uint8_t> drive;   // drive[i] = i-th driving bit of the section
    std::vector<double> symbols;       // +1/-1, one per channel use (unit amplitude)
};

struct Trellis {
    int num_states = 0;
    int driving_bits_per_section = 0;
    int uses_per_section = 0;
    std::vector<Branch> branches;

    // branch id for (state, drive index); drive index bit i = drive[i]
    std::vector<int> outgoing_index;

    void build_index() {
        outgoing_index.assign(static_cast<std::size_t>(num_states) << driving_bits_per_section, -1);
        for (std::size_t b = 0; b < branches.size(); ++b) {
            std::uint32_t d = 0;
            for (std::size_t i = 0; i < branches[b].drive.size(); ++i)
                d |= static_cast<std::uint32_t>(branches[b].drive[i]) << i;
            std::size_t slot = (static_cast<std::size_t>(branches[b].s_minus) << driving_bits_per_section) | d;
            if (outgoing_index[slot] != -1)
                throw std::invalid_argument("duplicate (state, drive) branch in trellis");
            outgoing_index[slot] = static_cast<int>(b);
        }
        for (int idx : outgoing_index)
            if (idx < 0) throw std::invalid_argument("missing (state, drive) branch in trellis");
    }

    const Branch& outgoing(int state, std::uint32_t drive_index) const {
        return branches[static_cast<std::size_t>(
            outgoing_index[(static_cast<std::size_t>(state) << driving_bits_per_section) | drive_index])];
    }
};

inline double bit_to_symbol(std::uint8_t bit) { return bit ? -1.0 : 1.0; }

// Shift-register machine of a rate-1/n feed-forward code. State keeps the
// newest input bit in the low position. One driving bit per section; the j-th
// output bit maps to symbols[j] = (-1)^bit.
inline Trellis build_conv_trellis(const GeneratorMatrix& g) {
    g.validate();
    const int m = g.memory();
    const int n_out = static_cast<int>(g.polynomials.size());
    Trellis t;
    t.num_states = 1 << m;
    t.driving_bits_per_section = 1;
    t.uses_per_section = n_out;
    const int mask = (1 << m) - 1;
    for (int s = 0; s < t.num_states; ++s) {
        for (int u = 0; u <= 1; ++u) {
            Branch b;
            b.s_minus = s;
            b.s_plus = ((s << 1) | u) & mask;
            b.drive = {static_cast<std::uint8_t>(u)};
            for (const auto& poly : g.polynomials) {
                std::uint8_t y = poly[0] ? static_cast<std::uint8_t>(u) : 0;
                for (std::size_t k = 1; k < poly.size(); ++k)
                    if (poly[k]) y ^= static_cast<std::uint8_t>((s >> (k - 1)) & 1);
                b.symbols.push_back(bit_to_symbol(y));
            }
            t.branches.push_back(std::move(b));
        }
    }
    t.build_index();
    return t;
}

// Single-state machine emitting bits_per_section i.u.d. symbols per section.
inline Trellis build_iud_trellis(int bits_per_section) {
    if (bits_per_section < 1)
        throw std::invalid_argument("iud trellis needs at least one bit per section");
    Trellis t;
    t.num_states = 1;
    t.driving_bits_per_section = bits_per_section;
    t.uses_per_section = bits_per_section;
    for (std::uint32_t d = 0; d < (1u << bits_per_section); ++d) {
        Branch b;
        b.s_minus = 0;
        b.s_plus = 0;
        for (int i = 0; i < bits_per_section; ++i) {
            std::uint8_t bit = static_cast<std::uint8_t>((d >> i) & 1);
            b.drive.push_back(bit);
            b.symbols.push_back(bit_to_symbol(bit));
        }
        t.branches.push_back(std::move(b));
    }
    t.build_index();
    return t;
}

// Concatenates k sections into one; states are preserved, branches become
// the k-step paths.
inline Trellis self_compose(const Trellis& t, int k) {
    if (k < 1) throw std::invalid_argument("self_compose factor must be >= 1");
    if (k == 1) return t;
    if (t.driving_bits_per_section * k > 20)
        throw std::invalid_argument("self_compose: composed section exceeds 20 driving bits");
    Trellis r;
    r.num_states = t.num_states;
    r.driving_bits_per_section = t.driving_bits_per_section * k;
    r.uses_per_section = t.uses_per_section * k;
    const int b = t.driving_bits_per_section;
    const std::uint64_t seg_mask = (1ull << b) - 1;
    for (int s = 0; s < t.num_states; ++s) {
        for (std::uint64_t d = 0; d < (1ull << r.driving_bits_per_section); ++d) {
            Branch nb;
            nb.s_minus = s;
            int cur = s;
            for (int j = 0; j < k; ++j) {
                const Branch& step = t.outgoing(cur, static_cast<std::uint32_t>((d >> (j * b)) & seg_mask));
                nb.drive.insert(nb.drive.end(), step.drive.begin(), step.drive.end());
                nb.symbols.insert(nb.symbols.end(), step.symbols.begin(), step.symbols.end());
                cur = step.s_plus;
            }
            nb.s_plus = cur;
            r.branches.push_back(std::move(nb));
        }
    }
    r.build_index();
    return r;
}

struct JointBranch {
    int s_minus = 0;
    int s_plus = 0;
    std::vector<std::uint8_t> drive1, drive2;
    std::vector<double> symbols1, symbols2;   // unit amplitude, length uses_per_section each
};

// Product machine of two senders, aligned to a common section length.
// Joint state = state1 * |S2| + state2; joint drive index = (d1 << b2) | d2.
struct JointTrellis {
    int num_states = 0;
    int driving_bits_per_section = 0;   // bits of sender 1 plus bits of sender 2
    int uses_per_section = 0;
    Trellis sender1, sender2;           // the aligned (self-composed) component machines
    std::vector<JointBranch> branches;
    std::vector<int> outgoing_index;

    const JointBranch& outgoing(int state, std::uint32_t drive_index) const {
        return branches[static_cast<std::size_t>(
            outgoing_index[(static_cast<std::size_t>(state) << driving_bits_per_section) | drive_index])];
    }
};

// Aligns the two machines to the least common multiple of their section
// lengths, then takes the Cartesian product of states and branches.
inline JointTrellis product_trellis(const Trellis& t1, const Trellis& t2) {
    const int l = std::lcm(t1.uses_per_section, t2.uses_per_section);
    JointTrellis jt;
    jt.sender1 = self_compose(t1, l / t1.uses_per_section);
    jt.sender2 = self_compose(t2, l / t2.uses_per_section);
    jt.uses_per_section = l;
    jt.num_states = jt.sender1.num_states * jt.sender2.num_states;
    const int b1 = jt.sender1.driving_bits_per_section;
    const int b2 = jt.sender2.driving_bits_per_section;
    jt.driving_bits_per_section = b1 + b2;
    const int s2n = jt.sender2.num_states;
    for (int s1 = 0; s1 < jt.sender1.num_states; ++s1) {
        for (int s2 = 0; s2 < s2n; ++s2) {
            for (std::uint32_t d1 = 0; d1 < (1u << b1); ++d1) {
                const Branch& br1 = jt.sender1.outgoing(s1, d1);
                for (std::uint32_t d2 = 0; d2 < (1u << b2); ++d2) {
                    const Branch& br2 = jt.sender2.outgoing(s2, d2);
                    JointBranch jb;
                    jb.s_minus = s1 * s2n + s2;
                    jb.s_plus = br1.s_plus * s2n + br2.s_plus;
                    jb.drive1 = br1.drive;
                    jb.drive2 = br2.drive;
                    jb.symbols1 = br1.symbols;
                    jb.symbols2 = br2.symbols;
                    jt.branches.push_back(std::move(jb));
                }
            }
        }
    }
    jt.outgoing_index.assign(static_cast<std::size_t>(jt.num_states) << jt.driving_bits_per_section, -1);
    for (std::size_t b = 0; b < jt.branches.size(); ++b) {
        std::uint32_t d1 = 0, d2 = 0;
        for (std::size_t i = 0; i < jt.branches[b].drive1.size(); ++i)
            d1 |= static_cast<std::uint32_t>(jt.branches[b].drive1[i]) << i;
        for (std::size_t i = 0; i < jt.branches[b].drive2.size(); ++i)
            d2 |= static_cast<std::uint32_t>(jt.branches[b].drive2[i]) << i;
        std::size_t slot = (static_cast<std::size_t>(jt.branches[b].s_minus) << jt.driving_bits_per_section) |
                           ((d1 << b2) | d2);
        jt.outgoing_index[slot] = static_cast<int>(b);
    }
    return jt;
}

}  // namespace gifc
