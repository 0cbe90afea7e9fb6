#pragma once

#include <stdexcept>
#include <string>

namespace retractlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// covers contain a cycle or the closure is not antisymmetric
struct NotAPoset : Error {
    using Error::Error;
};

/// some pair lacks a unique meet or join; carries a witness pair
struct NotALattice : Error {
    NotALattice(int a_, int b_, bool meet_side_)
        : Error(std::string("not a lattice: elements ") + std::to_string(a_) + " and " +
                std::to_string(b_) + " have no unique " + (meet_side_ ? "meet" : "join")),
          a(a_),
          b(b_),
          meet_side(meet_side_) {}
    int a, b;
    bool meet_side;
};

struct NotACongruence : Error {
    using Error::Error;
};

struct NotARetraction : Error {
    using Error::Error;
};

struct NotARetract : Error {
    using Error::Error;
};

struct NotFactorizable : Error {
    using Error::Error;
};

struct SizeLimit : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InvalidShape : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

namespace caps {
/// hard ceiling on element counts of constructed lattices
inline constexpr int construction = 4096;
/// brute-force enumeration ceiling (retractions, congruences, subsets)
inline constexpr int brute_force = 12;
/// compatible-quasiorder enumeration ceiling
inline constexpr int quasiorder = 8;
/// isomorph-free lattice enumeration ceiling
inline constexpr int enumeration = 9;
}  // namespace caps

inline void require_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw SizeLimit(std::string(what) + ": size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
}

}  // namespace retractlab
