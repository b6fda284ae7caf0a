#include "cgknot/parse.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace cgknot {

namespace {

class Cursor {
  public:
    explicit Cursor(const std::string& src) : src_(src) {}

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= src_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool eat(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what)
    {
        if (!eat(c))
            fail(std::string("expected ") + what);
    }
    std::size_t column()
    {
        skip_ws();
        return pos_ + 1;
    }
    [[noreturn]] void fail(const std::string& msg, std::size_t col = 0)
    {
        std::size_t c = col ? col : column();
        std::ostringstream os;
        os << "parse error at column " << c << ": " << msg;
        throw ParseError(os.str(), c, src_);
    }
    long integer(const char* what)
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+'))
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail(std::string("expected ") + what);
        }
        long v = 0;
        try {
            v = std::stol(src_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            fail("integer out of range", start + 1);
        }
        return v;
    }

  private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

CableWord parse_knot(Cursor& cur)
{
    std::size_t col = cur.column();
    if (cur.eat('U'))
        return CableWord();
    if (!cur.eat('T'))
        cur.fail("expected a knot (\"U\" or \"T(p,q;...)\")", col);
    cur.expect('(', "'(' after T");
    std::vector<CableStage> stages;
    for (;;) {
        std::size_t pair_col = cur.column();
        long p = cur.integer("cable index p");
        cur.expect(',', "',' between cable indices");
        long q = cur.integer("cable index q");
        if (p < 2)
            cur.fail("cable index p must be at least 2", pair_col);
        if (q < 1)
            cur.fail("cable index q must be positive", pair_col);
        if (std::gcd(p, q) != 1) {
            std::ostringstream os;
            os << "cable indices " << p << "," << q << " are not coprime";
            cur.fail(os.str(), pair_col);
        }
        stages.push_back({p, q});
        if (cur.eat(';'))
            continue;
        cur.expect(')', "';' or ')' in cable word");
        break;
    }
    return CableWord(stages);
}

} // namespace

KnotExpr parse_expression(const std::string& src)
{
    Cursor cur(src);
    KnotExpr e;
    if (cur.done())
        cur.fail("empty expression");
    // the bare literal 0 denotes the empty sum
    {
        Cursor probe = cur;
        if (probe.eat('0') && probe.done())
            return e;
    }
    bool first = true;
    for (;;) {
        long sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (cur.eat('+')) {
            if (first)
                cur.fail("unexpected leading '+'");
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        long coeff = 1;
        std::size_t term_col = cur.column();
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.integer("coefficient");
            if (coeff == 0)
                cur.fail("zero coefficient", term_col);
            cur.expect('*', "'*' after coefficient");
        }
        CableWord w = parse_knot(cur);
        e.add_term(w, sign * coeff);
        first = false;
        if (cur.done())
            break;
        char c = cur.peek();
        if (c != '+' && c != '-')
            cur.fail("expected '+' or '-' between terms");
    }
    return e;
}

CableWord parse_word(const std::string& src)
{
    Cursor cur(src);
    CableWord w = parse_knot(cur);
    if (!cur.done())
        cur.fail("trailing input after knot");
    return w;
}

FamilySpec parse_family(const std::string& src)
{
    FamilySpec fam;
    std::size_t base = 0;
    std::size_t start = 0;
    for (;;) {
        std::size_t bar = src.find('|', start);
        std::string part = src.substr(start, bar == std::string::npos ? bar : bar - start);
        base = start;

        bool have_k = false, have_q = false;
        FamilyMember mem;
        mem.n = 1;
        std::size_t fpos = 0;
        for (;;) {
            std::size_t semi = part.find(';', fpos);
            std::string field =
                part.substr(fpos, semi == std::string::npos ? semi : semi - fpos);
            std::size_t fcol = base + fpos + 1;
            std::size_t eq = field.find('=');
            if (eq == std::string::npos) {
                bool blank = field.find_first_not_of(" \t") == std::string::npos;
                if (!blank)
                    throw ParseError("parse error at column " + std::to_string(fcol) +
                                         ": expected key=value in family member",
                                     fcol, src);
            } else {
                std::string key = field.substr(0, eq);
                std::string val = field.substr(eq + 1);
                key.erase(0, key.find_first_not_of(" \t"));
                key.erase(key.find_last_not_of(" \t") + 1);
                if (key == "K") {
                    try {
                        mem.base = parse_word(val);
                    } catch (const ParseError& pe) {
                        throw ParseError(pe.what() + std::string(" (in K= field)"),
                                         pe.column(), pe.source());
                    }
                    have_k = true;
                } else if (key == "q") {
                    Cursor qc(val);
                    mem.q_odd = qc.integer("odd cable index");
                    qc.expect(',', "',' between the two indices");
                    mem.q_even = qc.integer("even-position cable index");
                    if (!qc.done())
                        qc.fail("trailing input after q= field");
                    have_q = true;
                } else if (key == "n") {
                    Cursor nc(val);
                    mem.n = nc.integer("coefficient");
                    if (!nc.done())
                        nc.fail("trailing input after n= field");
                } else {
                    throw ParseError("parse error at column " + std::to_string(fcol) +
                                         ": unknown family key \"" + key + "\"",
                                     fcol, src);
                }
            }
            if (semi == std::string::npos)
                break;
            fpos = semi + 1;
        }
        if (!have_k || !have_q)
            throw ParseError("parse error at column " + std::to_string(base + 1) +
                                 ": family member needs K= and q= fields",
                             base + 1, src);
        fam.push_back(mem);
        if (bar == std::string::npos)
            break;
        start = bar + 1;
    }
    return fam;
}

UnitAngle parse_angle(const std::string& src)
{
    Cursor cur(src);
    long num = cur.integer("angle numerator");
    long den = 1;
    if (cur.eat('/')) {
        den = cur.integer("angle denominator");
        if (den <= 0)
            cur.fail("angle denominator must be positive");
    }
    if (!cur.done())
        cur.fail("trailing input after angle");
    return UnitAngle(num, den);
}

std::set<long> parse_orders(const std::string& src)
{
    Cursor cur(src);
    std::set<long> orders;
    for (;;) {
        long v = cur.integer("root order");
        if (v <= 0)
            cur.fail("root orders must be positive");
        orders.insert(v);
        if (!cur.eat(','))
            break;
    }
    if (!cur.done())
        cur.fail("trailing input after order list");
    return orders;
}

} // namespace cgknot
