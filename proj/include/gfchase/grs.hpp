#pragma once

#include "gfchase/gf.hpp"
#include "gfchase/poly.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace gfchase {

// Primitive GRS code of length n = q-1 and odd design distance d.
//
// Index conventions, used everywhere in the library:
//  - coordinate i in [0, n) has error locator alpha = lambda^i and
//    multiplier a_tilde[i];
//  - an evaluation vector holds f(lambda^{-i}) at entry i, so the entry for
//    the evaluation point alpha^{-1} of locator alpha = lambda^i is entry i.
class GrsCode {
public:
    GrsCode(std::shared_ptr<const FieldCtx> field, unsigned d, std::vector<Elem> a_tilde = {});

    const FieldCtx& field() const { return *field_; }
    std::shared_ptr<const FieldCtx> field_ptr() const { return field_; }
    unsigned n() const { return n_; }
    unsigned d() const { return d_; }
    unsigned t() const { return (d_ - 1) / 2; }
    unsigned k() const { return n_ - (d_ - 1); }
    const std::vector<Elem>& a_tilde() const { return a_; }

    Elem locator(unsigned coord) const { return field_->exp(coord); }
    unsigned coordinate(Elem locator) const { return field_->log(locator); }
    // Multiplier of the coordinate whose locator is `locator`.
    Elem multiplier(Elem locator) const { return a_[coordinate(locator)]; }

private:
    std::shared_ptr<const FieldCtx> field_;
    unsigned n_;
    unsigned d_;
    std::vector<Elem> a_;
};

// S_0..S_{d-2}.
struct Syndrome {
    std::vector<Elem> s;

    Poly as_poly() const { return Poly(s); }
    bool is_zero() const;
    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

struct ErrorEstimate {
    std::vector<Elem> locators;
    std::vector<Elem> values;
    std::vector<Elem> as_vector;

    // Builds locators/values from a length-n error vector.
    static ErrorEstimate from_vector(const GrsCode& code, std::vector<Elem> e);
    // Builds the length-n vector from locator/value lists.
    static ErrorEstimate from_pairs(const GrsCode& code, std::vector<Elem> locators,
                                    std::vector<Elem> values);
    std::size_t weight() const { return locators.size(); }
};

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// c_i = a_i^{-1} * lambda^i * f(lambda^i), f the message polynomial of degree < k.
std::vector<Elem> encode(const GrsCode& code, std::span<const Elem> message);

Syndrome syndrome(const GrsCode& code, std::span<const Elem> y);

struct ElpEep {
    Poly sigma;
    Poly omega;
};

ElpEep elp_eep_of(const GrsCode& code, const ErrorEstimate& error);

// Forney values for the given locators; throws DecodeError when a locator is
// not a root of sigma or sigma' vanishes there. Zero values are returned as is.
std::vector<Elem> forney_values(const GrsCode& code, const Poly& sigma, const Poly& omega,
                                std::span<const Elem> locators);

bool syndrome_consistent(const GrsCode& code, const Syndrome& s, const ErrorEstimate& candidate);

} // namespace gfchase
