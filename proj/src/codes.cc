// Copyright 2026 The hetbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hetbell/codes.h"

#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hetbell {

namespace {

bool is_pure_x(const PauliString &s) {
    for (uint64_t w : s.z_words()) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool is_pure_z(const PauliString &s) {
    for (uint64_t w : s.x_words()) {
        if (w) {
            return false;
        }
    }
    return true;
}

/// Reduces packed rows to echelon form (highest bit first) and drops zero rows.
std::vector<uint64_t> echelon(std::vector<uint64_t> rows) {
    std::vector<uint64_t> out;
    for (int bit = 63; bit >= 0; bit--) {
        uint64_t b = uint64_t{1} << bit;
        auto it = std::find_if(rows.begin(), rows.end(), [&](uint64_t r) {
            return r & b;
        });
        if (it == rows.end()) {
            continue;
        }
        uint64_t pivot = *it;
        rows.erase(it);
        for (auto &r : rows) {
            if (r & b) {
                r ^= pivot;
            }
        }
        for (auto &r : out) {
            if (r & b) {
                r ^= pivot;
            }
        }
        out.push_back(pivot);
    }
    return out;
}

/// Splits a CSS stabilizer group into pure X-type and pure Z-type generating sets.
std::pair<std::vector<PauliString>, std::vector<PauliString>> split_css(
    const std::vector<PauliString> &gens, size_t n) {
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    bool all_pure = true;
    for (const auto &g : gens) {
        if (is_pure_x(g) && !g.is_identity()) {
            xs.push_back(g);
        } else if (is_pure_z(g) && !g.is_identity()) {
            zs.push_back(g);
        } else {
            all_pure = false;
        }
    }
    if (all_pure) {
        return {xs, zs};
    }
    if (2 * n > 64) {
        throw std::logic_error("CSS separation of mixed generators supports n <= 32");
    }
    // Echelon with the Z block in the high bits: rows whose leading bit lies in
    // the X block have no Z part, and they span the X-type subgroup.
    std::vector<uint64_t> zx_rows;
    std::vector<uint64_t> xz_rows;
    for (const auto &g : gens) {
        zx_rows.push_back((g.z_mask() << n) | g.x_mask());
        xz_rows.push_back((g.x_mask() << n) | g.z_mask());
    }
    uint64_t low = (uint64_t{1} << n) - 1;
    xs.clear();
    zs.clear();
    for (uint64_t r : echelon(zx_rows)) {
        if ((r >> n) == 0) {
            xs.push_back(PauliString::from_masks(n, r & low, 0));
        }
    }
    for (uint64_t r : echelon(xz_rows)) {
        if ((r >> n) == 0) {
            zs.push_back(PauliString::from_masks(n, 0, r & low));
        }
    }
    if (xs.size() + zs.size() != symplectic_rank(gens)) {
        throw std::logic_error("stabilizer group is not CSS-separable");
    }
    return {xs, zs};
}

constexpr std::array<Pauli, 3> kDecodeOrder = {Pauli::X, Pauli::Y, Pauli::Z};

}  // namespace

std::string_view code_name_str(CodeName name) {
    switch (name) {
        case CodeName::physical:
            return "physical";
        case CodeName::steane7:
            return "steane7";
        case CodeName::surface3:
            return "surface3";
    }
    return "?";
}

CodeName parse_code_name(std::string_view text) {
    for (auto c : {CodeName::physical, CodeName::steane7, CodeName::surface3}) {
        if (code_name_str(c) == text) {
            return c;
        }
    }
    throw std::invalid_argument("unknown code name '" + std::string(text) + "'");
}

bool Syndrome::is_zero() const {
    for (bool b : bits) {
        if (b) {
            return false;
        }
    }
    return true;
}

uint64_t Syndrome::index() const {
    if (bits.size() > 64) {
        throw std::out_of_range("syndrome longer than 64 bits");
    }
    uint64_t s = 0;
    for (size_t k = 0; k < bits.size(); k++) {
        s |= uint64_t(bits[k]) << k;
    }
    return s;
}

size_t symplectic_rank(std::span<const PauliString> strings) {
    // Rows as word vectors (x words then z words), eliminated column by column.
    std::vector<std::vector<uint64_t>> rows;
    for (const auto &s : strings) {
        std::vector<uint64_t> r(s.x_words().begin(), s.x_words().end());
        r.insert(r.end(), s.z_words().begin(), s.z_words().end());
        rows.push_back(std::move(r));
    }
    if (rows.empty()) {
        return 0;
    }
    size_t words = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < words * 64 && rank < rows.size(); col++) {
        size_t w = col / 64;
        uint64_t b = uint64_t{1} << (col % 64);
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & b)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k != rank && (rows[k][w] & b)) {
                for (size_t j = 0; j < words; j++) {
                    rows[k][j] ^= rows[rank][j];
                }
            }
        }
        rank++;
    }
    return rank;
}

StabilizerCode::StabilizerCode(
    CodeName name,
    size_t n,
    Circuit encoder,
    size_t input_wire,
    std::vector<PauliString> x_generators,
    std::vector<PauliString> z_generators,
    PauliString logical_x,
    PauliString logical_z)
    : name_(name),
      n_(n),
      encoder_(std::move(encoder)),
      input_wire_(input_wire),
      x_generators_(std::move(x_generators)),
      z_generators_(std::move(z_generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
    if (n_ == 0 || n_ > 64) {
        throw std::invalid_argument("code size must lie in [1, 64]");
    }
    if (input_wire_ >= n_) {
        throw std::invalid_argument("input wire outside the code block");
    }
    auto gens = generators();
    for (const auto &g : gens) {
        if (g.size() != n_) {
            throw std::logic_error("generator size does not match the code block");
        }
    }
    for (const auto &g : x_generators_) {
        if (!is_pure_x(g)) {
            throw std::logic_error("x generator is not X-type: " + g.str());
        }
    }
    for (const auto &g : z_generators_) {
        if (!is_pure_z(g)) {
            throw std::logic_error("z generator is not Z-type: " + g.str());
        }
    }
    if (gens.size() != n_ - 1) {
        throw std::logic_error("expected n - 1 generators for a single logical qubit");
    }
    if (symplectic_rank(gens) != gens.size()) {
        throw std::logic_error("generators are not independent");
    }
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            if (anticommutes(gens[a], gens[b])) {
                throw std::logic_error("generators do not commute: " + gens[a].str() + " " + gens[b].str());
            }
        }
        if (anticommutes(gens[a], logical_x_) || anticommutes(gens[a], logical_z_)) {
            throw std::logic_error("logical operator anticommutes with a generator");
        }
    }
    if (!anticommutes(logical_x_, logical_z_)) {
        throw std::logic_error("logical X and Z must anticommute");
    }
    if (is_pure_x(logical_x_) && is_pure_z(logical_z_)) {
        logicals_swapped_ = false;
    } else if (is_pure_z(logical_x_) && is_pure_x(logical_z_)) {
        logicals_swapped_ = true;
    } else {
        throw std::logic_error("logical operators must be pure X-type and Z-type");
    }

    for (const auto &g : gens) {
        generator_masks_.push_back(PauliMask::from(g));
    }
    for (const auto &g : gens) {
        if (is_pure_z(g)) {
            z_type_supports_.push_back(g.z_mask());
        }
    }
    decoder_table_ = build_decoder(n_, generator_masks_);
}

std::vector<PauliString> StabilizerCode::generators() const {
    std::vector<PauliString> all = x_generators_;
    all.insert(all.end(), z_generators_.begin(), z_generators_.end());
    return all;
}

Syndrome StabilizerCode::syndrome(const PauliString &e) const {
    if (e.size() != n_) {
        throw std::invalid_argument("error size does not match the code block");
    }
    Syndrome s;
    for (const auto &g : x_generators_) {
        s.bits.push_back(anticommutes(g, e));
    }
    for (const auto &g : z_generators_) {
        s.bits.push_back(anticommutes(g, e));
    }
    return s;
}

PauliString StabilizerCode::decode(const Syndrome &s) const {
    if (s.bits.size() != num_generators()) {
        throw std::invalid_argument("syndrome length does not match the code");
    }
    return decoder_table_[s.index()].to_string(n_);
}

Pauli StabilizerCode::logical_class(const PauliString &e) const {
    if (!syndrome(e).is_zero()) {
        throw std::invalid_argument("logical_class requires a trivial syndrome");
    }
    return make_pauli(anticommutes(e, logical_z_), anticommutes(e, logical_x_));
}

std::string StabilizerCode::str() const {
    std::stringstream out;
    out << "code " << code_name_str(name_) << " n=" << n_ << " input_wire=" << input_wire_ << "\n";
    for (size_t k = 0; k < x_generators_.size(); k++) {
        out << "SX" << k << " " << x_generators_[k].str() << "\n";
    }
    for (size_t k = 0; k < z_generators_.size(); k++) {
        out << "SZ" << k << " " << z_generators_[k].str() << "\n";
    }
    out << "LX " << logical_x_.str() << "\n";
    out << "LZ " << logical_z_.str() << "\n";
    return out.str();
}

std::vector<PauliMask> build_decoder(size_t n, std::span<const PauliMask> generators) {
    size_t m = generators.size();
    if (m > 24) {
        throw std::invalid_argument("lookup decoder limited to 24 generators");
    }
    std::vector<PauliMask> table(size_t{1} << m);
    std::vector<bool> filled(table.size(), false);
    size_t remaining = table.size();

    auto syndrome_of = [&](const PauliMask &e) {
        uint64_t s = 0;
        for (size_t k = 0; k < m; k++) {
            s |= uint64_t(anticommutes(generators[k], e)) << k;
        }
        return s;
    };
    std::vector<std::array<uint64_t, 3>> single(n);
    for (uint32_t q = 0; q < n; q++) {
        for (size_t k = 0; k < 3; k++) {
            PauliMask e;
            e.apply(q, kDecodeOrder[k]);
            single[q][k] = syndrome_of(e);
        }
    }

    filled[0] = true;
    remaining--;
    // Depth-first over (qubit, Pauli) sequences in lexicographic order, one weight at a time.
    std::function<void(uint32_t, size_t, uint64_t, PauliMask)> visit;
    visit = [&](uint32_t start, size_t left, uint64_t syn, PauliMask e) {
        if (remaining == 0) {
            return;
        }
        if (left == 0) {
            if (!filled[syn]) {
                filled[syn] = true;
                table[syn] = e;
                remaining--;
            }
            return;
        }
        for (uint32_t q = start; q + left <= n; q++) {
            for (size_t k = 0; k < 3; k++) {
                PauliMask next = e;
                next.apply(q, kDecodeOrder[k]);
                visit(q + 1, left - 1, syn ^ single[q][k], next);
            }
        }
    };
    for (size_t w = 1; w <= n && remaining > 0; w++) {
        visit(0, w, 0, PauliMask{});
    }
    if (remaining != 0) {
        throw std::logic_error("some syndromes are unreachable; generators are dependent");
    }
    return table;
}

Circuit build_steane_encoder() {
    using G = CliffordGate;
    std::vector<G> gates = {
        G::h(4),       G::h(5),       G::h(6),       G::cnot(3, 1), G::cnot(3, 2), G::cnot(4, 0), G::cnot(4, 2),
        G::cnot(4, 3), G::cnot(5, 0), G::cnot(5, 1), G::cnot(5, 3), G::cnot(6, 0), G::cnot(6, 1), G::cnot(6, 2),
    };
    return Circuit::schedule(std::move(gates), 7);
}

Circuit build_surface3_encoder() {
    using G = CliffordGate;
    // Planar layout, row-major: 0 1 2 / 3 4 / 5 6 7 / 8 9 / 10 11 12, input in the centre.
    // Wires 0, 1, 5, 7, 11, 12 each root one X check and fan out to the rest of it.
    // The input's X is first copied along 6-4-2 and 6-8-10, which becomes the logical X.
    // Listed by timestep; the ASAP schedule reproduces these ten steps.
    std::vector<G> gates = {
        G::h(0),         G::h(1),         G::h(5),         G::h(7),        G::h(11),       G::h(12),  G::cnot(6, 4),
        G::cnot(4, 2),   G::cnot(6, 8),   //
        G::cnot(1, 2),   G::cnot(8, 10),  //
        G::cnot(1, 4),   G::cnot(11, 10), //
        G::cnot(7, 4),   G::cnot(0, 1),   G::cnot(11, 8), //
        G::cnot(7, 6),   G::cnot(12, 11), //
        G::cnot(5, 6),   G::cnot(7, 9),   //
        G::cnot(5, 8),   G::cnot(12, 9),  //
        G::cnot(5, 3),   //
        G::cnot(0, 3),
    };
    return Circuit::schedule(std::move(gates), 13);
}

StabilizerCode derive_code(CodeName name, const Circuit &encoder, size_t input_wire) {
    size_t n = encoder.register_size();
    if (input_wire >= n) {
        throw std::invalid_argument("input wire outside the encoder register");
    }
    auto propagate = [&](PauliString s) {
        for (const auto &g : encoder.gates()) {
            conjugate_in_place(g, s);
        }
        return s;
    };
    std::vector<PauliString> images;
    for (size_t q = 0; q < n; q++) {
        if (q != input_wire) {
            images.push_back(propagate(PauliString::single(n, q, Pauli::Z)));
        }
    }
    auto [xs, zs] = split_css(images, n);
    StabilizerCode code(
        name,
        n,
        encoder,
        input_wire,
        std::move(xs),
        std::move(zs),
        propagate(PauliString::single(n, input_wire, Pauli::X)),
        propagate(PauliString::single(n, input_wire, Pauli::Z)));
    if (n > 1 && !has_distance_at_least_3(code)) {
        throw std::logic_error("derived code has distance below 3; check the encoder transcription");
    }
    return code;
}

StabilizerCode make_code(CodeName name) {
    switch (name) {
        case CodeName::physical:
            return derive_code(name, Circuit::schedule({}, 1), 0);
        case CodeName::steane7:
            return derive_code(name, build_steane_encoder(), 3);
        case CodeName::surface3:
            return derive_code(name, build_surface3_encoder(), 6);
    }
    throw std::invalid_argument("unknown code");
}

std::vector<CliffordGate> transversal_h(size_t n) {
    std::vector<CliffordGate> gates;
    for (uint32_t q = 0; q < n; q++) {
        gates.push_back(CliffordGate::h(q));
    }
    return gates;
}

StabilizerCode conjugate_code_through(const StabilizerCode &code, std::span<const CliffordGate> gates) {
    auto conj = [&](PauliString s) {
        for (const auto &g : gates) {
            conjugate_in_place(g, s);
        }
        return s;
    };
    std::vector<PauliString> images;
    for (const auto &g : code.generators()) {
        images.push_back(conj(g));
    }
    auto [xs, zs] = split_css(images, code.n());
    auto layers = code.encoder().layers();
    for (auto &layer : Circuit::schedule({gates.begin(), gates.end()}, code.n()).layers()) {
        layers.push_back(std::move(layer));
    }
    return StabilizerCode(
        code.name(),
        code.n(),
        Circuit::from_layers(layers, code.n()),
        code.input_wire(),
        std::move(xs),
        std::move(zs),
        conj(code.logical_x()),
        conj(code.logical_z()));
}

bool has_distance_at_least_3(const StabilizerCode &code) {
    size_t n = code.n();
    PauliMask lx = code.logical_x_mask();
    PauliMask lz = code.logical_z_mask();
    auto is_bad = [&](const PauliMask &e) {
        return code.syndrome_index(e) == 0 && (anticommutes(e, lx) || anticommutes(e, lz));
    };
    for (uint32_t a = 0; a < n; a++) {
        for (Pauli pa : kDecodeOrder) {
            PauliMask e;
            e.apply(a, pa);
            if (is_bad(e)) {
                return false;
            }
            for (uint32_t b = a + 1; b < n; b++) {
                for (Pauli pb : kDecodeOrder) {
                    PauliMask e2 = e;
                    e2.apply(b, pb);
                    if (is_bad(e2)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

CodeLibrary::CodeLibrary() {
    for (auto name : {CodeName::physical, CodeName::steane7, CodeName::surface3}) {
        auto reference = make_code(name);
        auto h = transversal_h(reference.n());
        auto rotated = conjugate_code_through(reference, h);
        families_.push_back(CodeFamily{std::move(reference), std::move(rotated)});
    }
}

const CodeLibrary &standard_codes() {
    static const CodeLibrary library;
    return library;
}

}  // namespace hetbell
