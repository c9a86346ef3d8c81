#include "numberspec.hpp"

#include <sstream>

namespace dio::cli {

namespace {

// Cursor over the input text; all errors are reported against the
// original string's byte offsets.
struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw SpecParseError(msg, pos); }

    bool consume(char c) {
        if (done() || text[pos] != c) return false;
        ++pos;
        return true;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
    }

    // [-]digits as an arbitrary-precision integer
    Int integer(const char* what) {
        const std::size_t start = pos;
        if (!done() && (peek() == '-' || peek() == '+')) ++pos;
        const std::size_t digits = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == digits) {
            pos = start;
            fail(std::string("expected an integer for the ") + what);
        }
        // explicit base (the auto-detecting mpz constructor reads a leading
        // zero as octal); mpz also rejects an explicit '+'
        const std::size_t from = text[start] == '+' ? start + 1 : start;
        return Int(text.substr(from, pos - from), 10);
    }

    Int positive(const char* what) {
        const std::size_t start = pos;
        Int v = integer(what);
        if (v < 1) {
            pos = start;
            fail(std::string(what) + " must be a positive integer");
        }
        return v;
    }

    // comma-separated positive integers; empty only if allow_empty
    std::vector<Int> positive_list(const char* what, bool allow_empty) {
        std::vector<Int> out;
        if (done() || !(peek() == '-' || peek() == '+' || (peek() >= '0' && peek() <= '9'))) {
            if (allow_empty) return out;
            fail(std::string("expected at least one ") + what);
        }
        out.push_back(positive(what));
        while (consume(',')) out.push_back(positive(what));
        return out;
    }
};

bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

std::string join(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    return os.str();
}

}  // namespace

NumberSpec parse_number_spec(const std::string& text) {
    Cursor c{text};
    NumberSpec spec;

    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        c.fail("expected '<kind>:' with kind one of rat, sqrt, cf, fib, periodic");
    const std::string kind = text.substr(0, colon);
    c.pos = colon + 1;

    if (kind == "rat") {
        spec.kind = NumberSpec::Kind::rational;
        const Int num = c.integer("numerator");
        c.expect('/', "between numerator and denominator");
        const std::size_t den_at = c.pos;
        const Int den = c.integer("denominator");
        if (den == 0) {
            c.pos = den_at;
            c.fail("denominator must be nonzero");
        }
        spec.rat = make_rational(num, den);
    } else if (kind == "sqrt") {
        spec.kind = NumberSpec::Kind::square_root;
        const std::size_t at = c.pos;
        spec.sqrt_n = c.positive("radicand");
        Int root;
        if (perfect_square(spec.sqrt_n, root)) {
            c.pos = at;
            c.fail("radicand " + spec.sqrt_n.get_str() + " is a perfect square: sqrt:" +
                   spec.sqrt_n.get_str() + " = " + root.get_str() +
                   " is rational, use rat:" + root.get_str() + "/1");
        }
    } else if (kind == "cf") {
        spec.kind = NumberSpec::Kind::finite_cf;
        spec.cf_a0 = c.integer("leading term a0");
        if (c.consume(';'))
            spec.cf_terms = c.positive_list("partial quotient", /*allow_empty=*/false);
    } else if (kind == "fib") {
        spec.kind = NumberSpec::Kind::extremal;
        spec.fib_a = c.positive("first letter value a");
        c.expect(',', "between a and b");
        const std::size_t b_at = c.pos;
        spec.fib_b = c.positive("second letter value b");
        if (spec.fib_a == spec.fib_b) {
            c.pos = b_at;
            c.fail("a and b must be distinct");
        }
    } else if (kind == "periodic") {
        spec.kind = NumberSpec::Kind::periodic;
        // preperiod: a0 (any integer) then positive tail entries
        if (!c.done() && c.peek() != '|') {
            spec.periodic.preperiod.push_back(c.integer("preperiod term a0"));
            while (c.consume(','))
                spec.periodic.preperiod.push_back(c.positive("preperiod partial quotient"));
        }
        c.expect('|', "between the preperiod and the period");
        spec.periodic.period = c.positive_list("period partial quotient", /*allow_empty=*/false);
    } else {
        c.pos = 0;
        c.fail("unknown kind '" + kind + "' (expected rat, sqrt, cf, fib or periodic)");
    }

    if (!c.done()) c.fail("trailing characters after a complete spec");
    return spec;
}

std::string NumberSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::rational:
            os << "rat:" << rat.get_num().get_str() << '/' << rat.get_den().get_str();
            break;
        case Kind::square_root:
            os << "sqrt:" << sqrt_n.get_str();
            break;
        case Kind::finite_cf:
            os << "cf:" << cf_a0.get_str();
            if (!cf_terms.empty()) os << ';' << join(cf_terms);
            break;
        case Kind::extremal:
            os << "fib:" << fib_a.get_str() << ',' << fib_b.get_str();
            break;
        case Kind::periodic:
            os << "periodic:" << join(periodic.preperiod) << '|' << join(periodic.period);
            break;
    }
    return os.str();
}

TargetDescriptor NumberSpec::target() const {
    switch (kind) {
        case Kind::rational: return TargetDescriptor::rational_of(rat);
        case Kind::square_root: return TargetDescriptor::square_root(sqrt_n);
        case Kind::finite_cf: return TargetDescriptor::finite_cf_of(cf_a0, cf_terms);
        case Kind::extremal: return TargetDescriptor::extremal(fib_a, fib_b);
        case Kind::periodic: return TargetDescriptor::eventually_periodic(periodic);
    }
    throw std::logic_error("NumberSpec: bad kind");
}

bool NumberSpec::operator==(const NumberSpec& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::rational: return rat == other.rat;
        case Kind::square_root: return sqrt_n == other.sqrt_n;
        case Kind::finite_cf: return cf_a0 == other.cf_a0 && cf_terms == other.cf_terms;
        case Kind::extremal: return fib_a == other.fib_a && fib_b == other.fib_b;
        case Kind::periodic:
            return periodic.preperiod == other.periodic.preperiod &&
                   periodic.period == other.periodic.period;
    }
    return false;
}

}  // namespace dio::cli
