// SPDX-License-Identifier: Apache-2.0

#include "sstkf/convcode.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sstkf {

DecoderMode parse_mode(std::string_view text) {
    if (text == "general") return DecoderMode::General;
    if (text == "qli") return DecoderMode::Qli;
    throw std::invalid_argument("mode must be 'general' or 'qli'");
}

std::string_view to_string(DecoderMode mode) { return mode == DecoderMode::General ? "general" : "qli"; }

ConvCode::ConvCode(std::string name, BinaryPolyMatrix g, BinaryPolyMatrix ginv, std::optional<BinaryPolyMatrix> h)
    : name_(std::move(name)), g_(std::move(g)), ginv_(std::move(ginv)), h_(std::move(h)) {
    if (g_.rows() != 1 || g_.cols() != 2) throw std::invalid_argument("only rate-1/2 generators (1 x 2) are supported");
    if (ginv_.rows() != 2 || ginv_.cols() != 1) throw std::invalid_argument("right inverse must be 2 x 1");
    if (!verify_right_inverse(g_, ginv_)) throw std::invalid_argument("Ginv is not a right inverse of G");
    if (h_) {
        if (h_->rows() != 1 || h_->cols() != 2) throw std::invalid_argument("check matrix must be 1 x 2");
        const BinaryPoly check = g1() * h_->at(0, 0) + g2() * h_->at(0, 1);
        if (!check.is_zero()) throw std::invalid_argument("G H^T is not zero");
    }
    nu_ = g_.max_degree();
    const BinaryPoly diff = g1() + g2();
    if (diff.weight() == 1) qli_delay_ = diff.degree();
}

BinaryPolyMatrix right_inverse_qli(BinaryPoly gprime) {
    return BinaryPolyMatrix::column({gprime + BinaryPoly::one(), gprime});
}

QliCode make_qli(BinaryPoly gprime) {
    if (gprime.is_zero()) throw std::invalid_argument("g' must be nonzero");
    if (gprime.coeff(0)) throw std::invalid_argument("g' must not have a constant term");
    const BinaryPoly d = BinaryPoly::monomial(1);
    const BinaryPoly g1 = BinaryPoly::one() + d * gprime;
    const BinaryPoly g2 = g1 + d;
    ConvCode base("qli:" + gprime.to_string(), BinaryPolyMatrix::row({g1, g2}), right_inverse_qli(gprime),
                  BinaryPolyMatrix::row({g2, g1}));
    return QliCode{std::move(base), 1, gprime};
}

ConvCode builtin_code(std::string_view id) {
    auto p = [](std::string_view s) { return BinaryPoly::parse(s); };
    if (id == "c1") {
        return ConvCode("c1", BinaryPolyMatrix::row({p("111"), p("101")}), BinaryPolyMatrix::column({p("01"), p("11")}),
                        BinaryPolyMatrix::row({p("101"), p("111")}));
    }
    if (id == "c2") {
        // g' = D^2 + D^4 + D^5
        return ConvCode("c2", BinaryPolyMatrix::row({p("1001011"), p("1101011")}),
                        BinaryPolyMatrix::column({p("101011"), p("001011")}),
                        BinaryPolyMatrix::row({p("1101011"), p("1001011")}));
    }
    throw std::invalid_argument("unknown built-in code '" + std::string(id) + "'");
}

namespace {

std::vector<BinaryPoly> poly_list(const nlohmann::json& j, const char* key, std::size_t expected) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw std::invalid_argument(std::string("code definition needs array '") + key + "'");
    }
    std::vector<BinaryPoly> out;
    for (const auto& e : j.at(key)) out.push_back(BinaryPoly::parse(e.get<std::string>()));
    if (out.size() != expected) {
        throw std::invalid_argument(std::string("'") + key + "' must have " + std::to_string(expected) + " entries");
    }
    return out;
}

}  // namespace

ConvCode parse_code_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed code JSON: ") + e.what());
    }
    const std::string name = j.value("name", std::string("custom"));
    auto g = poly_list(j, "g", 2);
    auto ginv = poly_list(j, "ginv", 2);
    std::optional<BinaryPolyMatrix> h;
    if (j.contains("h")) h = BinaryPolyMatrix::row(poly_list(j, "h", 2));
    ConvCode code(name, BinaryPolyMatrix::row(std::move(g)), BinaryPolyMatrix::column(std::move(ginv)), std::move(h));
    if (j.value("qli", false) && !code.is_qli()) {
        throw std::invalid_argument("code marked qli but g1 + g2 is not a single monomial");
    }
    return code;
}

ConvCode load_code(std::string_view id_or_path) {
    if (id_or_path == "c1" || id_or_path == "c2") return builtin_code(id_or_path);
    std::ifstream in{std::string(id_or_path)};
    if (!in) throw std::invalid_argument("cannot open code definition '" + std::string(id_or_path) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_code_json(ss.str());
}

std::string code_to_json(const ConvCode& code) {
    nlohmann::json j;
    j["name"] = code.name();
    j["g"] = {code.g1().to_string(), code.g2().to_string()};
    j["ginv"] = {code.ginv().at(0, 0).to_string(), code.ginv().at(1, 0).to_string()};
    if (code.h()) j["h"] = {code.h()->at(0, 0).to_string(), code.h()->at(0, 1).to_string()};
    j["qli"] = code.is_qli();
    return j.dump();
}

BitPairs encode(const ConvCode& code, const Bits& info) {
    const Bits y1 = apply_poly(code.g1(), info);
    const Bits y2 = apply_poly(code.g2(), info);
    BitPairs out(info.size());
    for (std::size_t k = 0; k < info.size(); ++k) out[k] = {y1[k], y2[k]};
    return out;
}

Bits syndrome(const BinaryPolyMatrix& h, const BitPairs& z_hard) {
    if (h.rows() != 1 || h.cols() != 2) throw std::invalid_argument("syndrome: H must be 1 x 2");
    Bits z1(z_hard.size()), z2(z_hard.size());
    for (std::size_t k = 0; k < z_hard.size(); ++k) {
        z1[k] = z_hard[k][0];
        z2[k] = z_hard[k][1];
    }
    Bits out = apply_poly(h.at(0, 0), z1);
    const Bits second = apply_poly(h.at(0, 1), z2);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] ^= second[k];
    return out;
}

BinaryPolyMatrix main_encoded_block_map(const ConvCode& code, DecoderMode mode) {
    if (mode == DecoderMode::General) return polymat_mul(code.ginv(), code.g());
    const auto pre = BinaryPolyMatrix::column({BinaryPoly::one(), BinaryPoly::one()});
    return polymat_mul(pre, code.g());
}

namespace {

// Branch label of the shift register `reg` (bit j = i_{k-j}).
unsigned branch_label(const ConvCode& code, std::uint64_t reg) {
    const unsigned y1 = std::popcount(reg & code.g1().bits()) & 1u;
    const unsigned y2 = std::popcount(reg & code.g2().bits()) & 1u;
    return (y1 << 1) | y2;
}

template <class Visit>
void walk(const ConvCode& code, std::uint64_t state, int remaining, Visit&& visit, std::vector<unsigned>& labels) {
    if (remaining == 0) {
        visit(labels);
        return;
    }
    const std::uint64_t mask = (std::uint64_t{1} << code.nu()) - 1;
    for (std::uint64_t u = 0; u < 2; ++u) {
        const std::uint64_t reg = (state << 1) | u;
        labels.push_back(branch_label(code, reg));
        walk(code, reg & mask, remaining - 1, visit, labels);
        labels.pop_back();
    }
}

}  // namespace

std::uint64_t trellis_subpath_count(const ConvCode& code, int length) {
    if (length < 0) throw std::invalid_argument("sub-path length must be nonnegative");
    std::uint64_t count = 0;
    std::vector<unsigned> labels;
    const std::uint64_t states = std::uint64_t{1} << code.nu();
    for (std::uint64_t s = 0; s < states; ++s) {
        walk(code, s, length, [&](const std::vector<unsigned>&) { ++count; }, labels);
    }
    return count;
}

std::uint64_t distinct_label_sequences(const ConvCode& code, int length) {
    if (length < 0) throw std::invalid_argument("sub-path length must be nonnegative");
    std::set<std::vector<unsigned>> seen;
    std::vector<unsigned> labels;
    const std::uint64_t states = std::uint64_t{1} << code.nu();
    for (std::uint64_t s = 0; s < states; ++s) {
        walk(code, s, length, [&](const std::vector<unsigned>& l) { seen.insert(l); }, labels);
    }
    return seen.size();
}

}  // namespace sstkf
