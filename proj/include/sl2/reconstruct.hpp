#pragma once

#include "sl2/bigint.hpp"
#include "sl2/disc_model.hpp"
#include "sl2/tiling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl2 {

struct CaseId {
    enum class Kind { Case1, Case2, Case3, Case4, Case5, Case6 };
    enum class Variant { None, FirstQuadrant, ThirdQuadrant, Row, Column };

    Kind kind = Kind::Case6;
    Variant variant = Variant::None;

    std::string name() const;
    bool operator==(const CaseId&) const = default;
};

// Throws InconsistentCertificate.
CaseId classify(const OnesCertificate& cert);
DiscShape shape_for(const CaseId& id);

struct NonnegSL2Matrix {
    BigInt i = 1, j = 0, k = 0, l = 1;

    BigInt det() const { return i * l - j * k; }
    bool operator==(const NonnegSL2Matrix&) const = default;
};

enum class Move { AddRow1ToRow2, AddRow2ToRow1, AddCol1ToCol2, AddCol2ToCol1 };

std::string to_string(Move m);

// Throws NotCoprime or OutOfRange.
NonnegSL2Matrix matrix_for(const BigInt& r, const BigInt& m);
std::vector<Move> matrix_word(const NonnegSL2Matrix& x);
NonnegSL2Matrix replay(const std::vector<Move>& word);

// Triangulated polygon on intervals II and IV. II vertices run beta..gamma,
// IV vertices run phi..chi; chi-beta and gamma-phi are sides.
struct EarPolygon {
    DiscFragment polygon;
    Vertex chi, beta, gamma, phi;
};

EarPolygon ear_glued_polygon(const BigInt& r, const BigInt& m);

struct DwrParams {
    Index a = 0, b = 0, c = 0;
    Index v = 0, w = 0;
    BigInt min_value;
    BigInt ell, m, r, s;
};

// Throws InsufficientMargin or MinIsOne.
DwrParams dwr_parameters(const TilingWindow& w, const OnesCertificate& cert);

struct ConstructTrace {
    CaseId id;
    DiscFragment fragment;
    // Set when the window has no 1-entry.
    std::optional<DwrParams> dwr;
    std::optional<Vertex> chi, beta, gamma, phi;
};

// Throws WindowTooSmall, InconsistentCertificate, AgreementFailure.
DiscFragment construct(const TilingWindow& w, const OnesCertificate& cert);
ConstructTrace construct_traced(const TilingWindow& w, const OnesCertificate& cert);

struct AgreementReport {
    bool structural = false;
    bool quiddity_I = false;
    bool quiddity_III = false;
    bool corner = false;
    bool full = false;
    std::optional<Cell> first_mismatch;
    std::vector<std::string> issues;

    bool ok() const { return structural && full; }
};

AgreementReport verify_agreement(const DiscFragment& frag, const TilingWindow& w);

}  // namespace sl2
