#include "sxq/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sxq {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_ident(const std::string& s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    for (char c : s)
        if (!is_ident_char(c)) return false;
    return true;
}

// Cursor over one logical line; reports 1-based line/column on error.
struct Cursor {
    const std::string& text;
    int line;
    size_t pos = 0;

    Cursor(const std::string& t, int l) : text(t), line(l) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, static_cast<int>(pos) + 1, msg);
    }
    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip_ws();
        if (!is_ident_start(peek())) fail("expected identifier");
        size_t start = pos;
        while (pos < text.size() && is_ident_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    }
    double number() {
        skip_ws();
        size_t start = pos;
        if (peek() == '+' || peek() == '-') ++pos;
        bool digits = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            digits = true;
        }
        if (peek() == '.') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                digits = true;
            }
        }
        if (!digits) fail("expected number");
        if (peek() == 'e' || peek() == 'E') {
            size_t mark = pos;
            ++pos;
            if (peek() == '+' || peek() == '-') ++pos;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                pos = mark;  // 'e' was not an exponent
            else
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
        }
        return std::stod(text.substr(start, pos - start));
    }
};

// expr := term (('+'|'-') term)*
// term := unary (('*'|'/') unary)*
// unary := '-'? atom
// atom := number | ident | 'i' | 'sqrt(' expr ')' | '(' expr ')'
struct ExprParser {
    Cursor& cur;
    const ParamEnv& env;

    cplx expr() {
        cplx v = term();
        for (;;) {
            if (cur.eat('+'))
                v += term();
            else if (cur.eat('-'))
                v -= term();
            else
                return v;
        }
    }
    cplx term() {
        cplx v = unary();
        for (;;) {
            if (cur.eat('*'))
                v *= unary();
            else if (cur.eat('/')) {
                cplx d = unary();
                if (std::abs(d) == 0.0) cur.fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }
    cplx unary() {
        if (cur.eat('-')) return -unary();
        return atom();
    }
    cplx atom() {
        cur.skip_ws();
        char c = cur.peek();
        if (c == '(') {
            cur.expect('(');
            cplx v = expr();
            cur.expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return cplx(cur.number(), 0.0);
        if (is_ident_start(c)) {
            std::string name = cur.ident();
            if (name == "i") return cplx(0.0, 1.0);
            if (name == "sqrt") {
                cur.expect('(');
                cplx v = expr();
                cur.expect(')');
                return std::sqrt(v);
            }
            if (!env.has(name)) cur.fail("unknown parameter '" + name + "'");
            return cplx(env.get(name), 0.0);
        }
        cur.fail("expected number, parameter, 'i', 'sqrt(', or '('");
    }
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ' && c != '\t') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

void ParamEnv::set(const std::string& name, double value) {
    if (!valid_ident(name)) throw std::invalid_argument("invalid parameter name '" + name + "'");
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite value for parameter '" + name + "'");
    bindings[name] = value;
}

double ParamEnv::get(const std::string& name) const {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw std::invalid_argument("unbound parameter '" + name + "'");
    return it->second;
}

LabeledPureState parse_state(const std::string& text, const ParamEnv& env) {
    LabeledPureState state;
    SubsystemLayout& layout = state.layout;
    ParamEnv scope = env;  // file `param` lines fill in defaults CLI did not set
    bool have_systems = false, have_roles = false, normalize = false;
    bool saw_ket = false, saw_factor = false;
    std::vector<bool> factor_covered;
    cvec& amps = state.amps;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
            raw.pop_back();
        Cursor cur(raw, lineno);
        if (cur.done()) continue;

        std::string kw = cur.ident();
        if (!have_systems && kw != "systems") cur.fail("first statement must be 'systems'");

        if (kw == "systems") {
            if (have_systems) cur.fail("duplicate 'systems' line");
            while (!cur.done()) {
                std::string label = cur.ident();
                cur.expect(':');
                long d = cur.integer();
                if (d < 2) cur.fail("factor '" + label + "' needs dimension >= 2");
                if (layout.factor_index(label) >= 0) cur.fail("duplicate factor '" + label + "'");
                layout.factors.push_back({label, static_cast<int>(d)});
            }
            if (layout.factors.empty()) cur.fail("'systems' declares no factors");
            have_systems = true;
            amps.assign(layout.total_dim(), 0.0);
            factor_covered.assign(layout.factors.size(), false);
        } else if (kw == "roles") {
            if (have_roles) cur.fail("duplicate 'roles' line");
            std::array<bool, 5> seen{};
            while (!cur.done()) {
                std::string name = cur.ident();
                Role role;
                if (!parse_role_name(name, role)) cur.fail("unknown role '" + name + "'");
                if (seen[static_cast<int>(role)]) cur.fail("role '" + name + "' given twice");
                seen[static_cast<int>(role)] = true;
                cur.expect('=');
                cur.skip_ws();
                if (cur.eat('-')) continue;  // trivial role
                size_t start = cur.pos;
                while (cur.pos < cur.text.size() && cur.text[cur.pos] != ' ' &&
                       cur.text[cur.pos] != '\t')
                    ++cur.pos;
                for (const auto& lbl : split_commas(cur.text.substr(start, cur.pos - start))) {
                    if (layout.factor_index(lbl) < 0) cur.fail("unknown factor '" + lbl + "'");
                    layout.role_labels(role).push_back(lbl);
                }
            }
            for (Role r : kAllRoles)
                if (!seen[static_cast<int>(r)]) cur.fail("role " + role_name(r) + " not assigned");
            have_roles = true;
        } else if (kw == "param") {
            std::string name = cur.ident();
            cur.expect('=');
            double v = cur.number();
            if (!cur.done()) cur.fail("trailing input after param value");
            if (!scope.has(name)) scope.set(name, v);  // CLI overrides win
        } else if (kw == "normalize") {
            if (cur.ident() != "on") cur.fail("expected 'normalize on'");
            normalize = true;
        } else if (kw == "ket") {
            if (saw_factor) cur.fail("'ket' and 'factor' lines cannot be mixed");
            saw_ket = true;
            cplx amp = ExprParser{cur, scope}.expr();
            cur.expect('|');
            // Index list: comma form always, contiguous digits only when all dims <= 10.
            std::vector<long> indices;
            bool all_small = true;
            for (const auto& f : layout.factors) all_small = all_small && f.dim <= 10;
            cur.skip_ws();
            size_t start = cur.pos;
            while (cur.pos < cur.text.size() && cur.text[cur.pos] != '>') ++cur.pos;
            if (cur.peek() != '>') cur.fail("unterminated ket, expected '>'");
            std::string body = cur.text.substr(start, cur.pos - start);
            ++cur.pos;
            if (body.find(',') != std::string::npos || layout.factors.size() == 1) {
                for (const auto& part : split_commas(body)) {
                    if (part.empty()) cur.fail("empty ket index");
                    for (char c : part)
                        if (!std::isdigit(static_cast<unsigned char>(c)))
                            cur.fail("ket index must be a nonnegative integer");
                    indices.push_back(std::stol(part));
                }
            } else {
                if (!all_small)
                    cur.fail("contiguous-digit ket form requires every dimension <= 10");
                for (char c : body) {
                    if (c == ' ' || c == '\t') continue;
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        cur.fail("ket digits must be 0-9");
                    indices.push_back(c - '0');
                }
            }
            if (!cur.done()) cur.fail("trailing input after ket");
            if (indices.size() != layout.factors.size())
                cur.fail("ket has " + std::to_string(indices.size()) + " indices, layout has " +
                         std::to_string(layout.factors.size()) + " factors");
            long g = 0;
            for (size_t i = 0; i < indices.size(); ++i) {
                if (indices[i] >= layout.factors[i].dim)
                    cur.fail("index " + std::to_string(indices[i]) + " out of range for factor '" +
                             layout.factors[i].label + "'");
                g = g * layout.factors[i].dim + indices[i];
            }
            amps[g] += amp;
        } else if (kw == "factor") {
            if (saw_ket) cur.fail("'ket' and 'factor' lines cannot be mixed");
            std::string builder = cur.ident();
            cur.expect('(');
            long d = cur.integer();
            cur.expect(')');
            cur.expect('@');
            cur.expect('(');
            std::vector<int> fidx;
            do {
                std::string lbl = cur.ident();
                int k = layout.factor_index(lbl);
                if (k < 0) cur.fail("unknown factor '" + lbl + "'");
                if (factor_covered[k]) cur.fail("factor '" + lbl + "' used twice");
                factor_covered[k] = true;
                fidx.push_back(k);
            } while (cur.eat(','));
            cur.expect(')');
            if (!cur.done()) cur.fail("trailing input after factor line");

            cvec sub;
            if (builder == "ghz") {
                if (fidx.size() != 3) cur.fail("ghz takes three labels");
                if (d < 2) cur.fail("ghz requires d >= 2");
                sub = build_ghz(static_cast<int>(d));
            } else if (builder == "maxent") {
                if (fidx.size() != 2) cur.fail("maxent takes two labels");
                if (d < 2) cur.fail("maxent requires d >= 2");
                sub = build_maxent(static_cast<int>(d));
            } else {
                cur.fail("unknown builder '" + builder + "' (expected maxent or ghz)");
            }
            for (int k : fidx)
                if (layout.factors[k].dim != d)
                    cur.fail("factor '" + layout.factors[k].label + "' has dimension " +
                             std::to_string(layout.factors[k].dim) + ", builder uses " +
                             std::to_string(d));

            // Tensor-multiply into the accumulated amplitudes: on the first
            // factor line the array is still all zeros, so seed it with ones.
            if (!saw_factor) amps.assign(amps.size(), 1.0);
            saw_factor = true;
            const size_t nf = layout.factors.size();
            std::vector<int> digits(nf, 0);
            for (size_t g = 0; g < amps.size(); ++g) {
                long sidx = 0;
                for (int k : fidx) sidx = sidx * d + digits[k];
                amps[g] *= sub[sidx];
                for (int i = static_cast<int>(nf) - 1; i >= 0; --i) {
                    if (++digits[i] < layout.factors[i].dim) break;
                    digits[i] = 0;
                }
            }
        } else {
            cur.fail("unknown statement '" + kw + "'");
        }
    }

    if (!have_systems) throw ParseError(lineno + 1, 1, "missing 'systems' line");
    if (!have_roles) throw ParseError(lineno + 1, 1, "missing 'roles' line");
    if (saw_factor)
        for (size_t i = 0; i < factor_covered.size(); ++i)
            if (!factor_covered[i])
                throw ParseError(lineno + 1, 1,
                                 "factor '" + layout.factors[i].label +
                                     "' not covered by any factor line");
    layout.validate();

    double n = state.norm();
    if (n < 1e-12) throw ParseError(lineno + 1, 1, "state is the zero vector");
    if (normalize) {
        for (auto& a : amps) a /= n;
    } else if (std::abs(n - 1.0) > 1e-9) {
        throw ParseError(lineno + 1, 1,
                         "norm " + std::to_string(n) + " is not 1 (add 'normalize on' to rescale)");
    }
    return state;
}

std::string serialize_state(const LabeledPureState& s) {
    std::ostringstream out;
    out << "systems";
    for (const auto& f : s.layout.factors) out << ' ' << f.label << ':' << f.dim;
    out << "\nroles";
    for (Role r : kAllRoles) {
        out << ' ' << role_name(r) << '=';
        const auto& labels = s.layout.role_labels(r);
        if (labels.empty()) {
            out << '-';
        } else {
            for (size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
        }
    }
    out << "\nnormalize on\n";
    char buf[64];
    std::vector<int> digits(s.layout.factors.size(), 0);
    for (size_t g = 0; g < s.amps.size(); ++g) {
        const cplx a = s.amps[g];
        if (std::abs(a) > 0.0) {
            std::snprintf(buf, sizeof buf, "(%.17g + %.17g*i)", a.real(), a.imag());
            out << "ket " << buf << " |";
            for (size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
            out << ">\n";
        }
        for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
            if (++digits[i] < s.layout.factors[i].dim) break;
            digits[i] = 0;
        }
    }
    return out.str();
}

}  // namespace sxq
