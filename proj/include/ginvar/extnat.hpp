#pragma once

#include <cstdint>
#include <string>

#include "ginvar/error.hpp"

namespace ginvar {

/// Natural number extended with infinity.  Infinity compares greater than
/// every finite value and renders as "inf" in text, null in JSON.
class ExtNat {
public:
    ExtNat() : fin_(true), v_(0) {}
    static ExtNat inf() { ExtNat e; e.fin_ = false; return e; }
    static ExtNat of(long v) { ExtNat e; e.v_ = v; return e; }

    bool is_finite() const { return fin_; }
    long value() const {
        if (!fin_) throw DomainError("value() on infinite extended natural");
        return v_;
    }

    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.fin_ == b.fin_ && (!a.fin_ || a.v_ == b.v_);
    }
    friend bool operator<(const ExtNat& a, const ExtNat& b) {
        if (!a.fin_) return false;
        if (!b.fin_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtNat& a, const ExtNat& b) { return a < b || a == b; }

    std::string str() const { return fin_ ? std::to_string(v_) : "inf"; }

private:
    bool fin_;
    long v_;
};

} // namespace ginvar
