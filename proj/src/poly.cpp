#include "apolar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace apolar {

VarSignature::VarSignature(std::vector<int> group_sizes) : sizes_(std::move(group_sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("signature needs at least one group");
    for (int n : sizes_) {
        if (n < 1) throw std::invalid_argument("signature group sizes must be positive");
        offsets_.push_back(total_);
        total_ += n;
    }
}

int VarSignature::group_of(int var) const {
    for (int g = groups() - 1; g >= 0; --g)
        if (var >= offsets_[g]) return g;
    throw std::out_of_range("variable index out of range");
}

std::string VarSignature::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sizes_[i]);
    }
    return s + "]";
}

VarSignature VarSignature::parse(std::string_view text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur += ch;
        } else if (ch == ',' || ch == ']') {
            if (cur.empty()) throw std::invalid_argument("malformed signature: " + std::string(text));
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch != '[' && ch != ' ') {
            throw std::invalid_argument("malformed signature: " + std::string(text));
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return VarSignature(out);
}

bool md_leq(const Multidegree& a, const Multidegree& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Multidegree md_add(const Multidegree& a, const Multidegree& b) {
    Multidegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Multidegree md_sub(const Multidegree& a, const Multidegree& b) {
    Multidegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Multidegree md_rad(const Multidegree& a) {
    Multidegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? 1 : 0;
    return r;
}

int md_total(const Multidegree& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string md_str(const Multidegree& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

std::vector<Multidegree> md_box(const Multidegree& d) {
    std::vector<Multidegree> out;
    Multidegree cur(d.size(), 0);
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(d.size()) - 1;
        while (i >= 0 && cur[i] == d[i]) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

long long md_box_size(const Multidegree& d) {
    long long n = 1;
    for (int x : d) {
        n *= (x + 1);
        if (n > (1LL << 40)) return n;
    }
    return n;
}

Multidegree multidegree_of(const Exponent& e, const VarSignature& sig) {
    Multidegree d(sig.groups(), 0);
    for (int g = 0; g < sig.groups(); ++g)
        for (int j = 0; j < sig.size(g); ++j) d[g] += e[sig.offset(g) + j];
    return d;
}

bool GrlexDesc::operator()(const Exponent& a, const Exponent& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lexicographic: larger power of earlier variable first
}

MultiPoly::MultiPoly(VarSignature sig, Role role) : sig_(std::move(sig)), role_(role) {}

MultiPoly MultiPoly::monomial(const VarSignature& sig, Exponent e, BigRational c, Role role) {
    MultiPoly p(sig, role);
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::constant(const VarSignature& sig, BigRational c) {
    return monomial(sig, Exponent(sig.total(), 0), std::move(c));
}

MultiPoly MultiPoly::with_role(Role r) const {
    MultiPoly p = *this;
    p.role_ = r;
    return p;
}

void MultiPoly::add_term(const Exponent& e, const BigRational& c) {
    if (static_cast<int>(e.size()) != sig_.total())
        throw std::invalid_argument("exponent length does not match signature");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigRational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

bool MultiPoly::is_homogeneous() const { return multidegree().has_value(); }

std::optional<Multidegree> MultiPoly::multidegree() const {
    if (terms_.empty()) return std::nullopt;
    Multidegree d = multidegree_of(terms_.begin()->first, sig_);
    for (const auto& [e, c] : terms_)
        if (multidegree_of(e, sig_) != d) return std::nullopt;
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // first term has the largest total degree in grlex-descending storage
    const Exponent& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const BigRational& c) const {
    MultiPoly r(sig_, role_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(sig_, role_);
    Exponent e(sig_.total());
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (int i = 0; i < sig_.total(); ++i) e[i] = a[i] + b[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return sig_ == o.sig_ && terms_ == o.terms_;
}

BigRational MultiPoly::evaluate(const std::vector<BigRational>& point) const {
    if (static_cast<int>(point.size()) != sig_.total())
        throw std::invalid_argument("evaluation point has wrong length");
    BigRational sum = 0;
    for (const auto& [e, c] : terms_) {
        BigRational t = c;
        for (int i = 0; i < sig_.total(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

std::string MultiPoly::str() const { return to_string(*this); }

// ---------------------------------------------------------------- printing

static std::string var_name(int v, const VarSignature& sig, Role role) {
    const char* prefix = role == Role::dual ? "d" : "x";
    if (sig.groups() == 1) return prefix + std::to_string(v + 1);
    int g = sig.group_of(v);
    return prefix + std::to_string(g + 1) + "_" + std::to_string(v - sig.offset(g) + 1);
}

std::string exponent_str(const Exponent& e, const VarSignature& sig, Role role) {
    std::string s;
    for (int v = 0; v < sig.total(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v, sig, role);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigRational a = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (is_const) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += exponent_str(e, p.signature(), p.role());
        }
    }
    return s;
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarSignature& sig) : t_(text), sig_(sig) {}

    MultiPoly run() {
        std::vector<std::pair<Exponent, BigRational>> terms;
        skip();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            auto [e, c] = term();
            terms.emplace_back(std::move(e), c * sign);
            skip();
        }
        MultiPoly p(sig_, role_.value_or(Role::primal));
        for (auto& [e, c] : terms) p.add_term(e, c);
        return p;
    }

private:
    bool at_end() const { return pos_ >= t_.size(); }
    char peek() const { return t_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    BigInt integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return BigInt(std::string(t_.substr(start, pos_ - start)));
    }

    int small_integer() {
        std::size_t start = pos_;
        BigInt v = integer();
        if (v > 1000000) throw ParseError("index or exponent too large", start);
        return static_cast<int>(v.get_si());
    }

    std::pair<Exponent, BigRational> term() {
        Exponent e(sig_.total(), 0);
        BigRational c = 1;
        bool any = false;
        while (true) {
            skip();
            if (at_end()) throw ParseError("unexpected end of input", pos_);
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                BigInt num = integer();
                skip();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip();
                    std::size_t dpos = pos_;
                    BigInt den = integer();
                    if (den == 0) throw ParseError("zero denominator", dpos);
                    BigRational q(num, den);
                    q.canonicalize();
                    c *= q;
                } else {
                    c *= BigRational(num);
                }
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                variable(e);
            } else {
                throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
            }
            any = true;
            skip();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term", pos_);
        return {e, c};
    }

    void variable(Exponent& e) {
        std::size_t start = pos_;
        char letter = peek();
        ++pos_;
        Role role = Role::primal;
        int group = -1;
        static const std::string letters = "xyzwuv";
        if (letter == 'd') {
            role = Role::dual;
            group = 0;
        } else {
            auto k = letters.find(letter);
            if (k == std::string::npos) throw ParseError(std::string("unknown variable letter '") + letter + "'", start);
            group = static_cast<int>(k);
        }
        int first = small_integer();
        int index = first;
        if (!at_end() && peek() == '_') {
            if (letter != 'x' && letter != 'd') throw ParseError("group_index form only allowed for x and d", start);
            ++pos_;
            group = first - 1;
            index = small_integer();
        }
        if (group < 0 || group >= sig_.groups())
            throw ParseError("group index out of range for signature " + sig_.str(), start);
        if (index < 1 || index > sig_.size(group))
            throw ParseError("variable index out of range for signature " + sig_.str(), start);
        if (role_ && *role_ != role) throw ParseError("mixed primal and dual variables", start);
        role_ = role;
        int power = 1;
        skip();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip();
            power = small_integer();
        }
        e[sig_.offset(group) + index - 1] += power;
    }

    std::string_view t_;
    const VarSignature& sig_;
    std::size_t pos_ = 0;
    std::optional<Role> role_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarSignature& sig) {
    return PolyParser(text, sig).run();
}

// ---------------------------------------------------------------- points

void ProductPoint::validate(const VarSignature& sig) const {
    if (static_cast<int>(forms.size()) != sig.groups())
        throw std::invalid_argument("product point has wrong number of groups");
    for (int g = 0; g < sig.groups(); ++g) {
        if (static_cast<int>(forms[g].size()) != sig.size(g))
            throw std::invalid_argument("product point form has wrong length");
        if (std::all_of(forms[g].begin(), forms[g].end(), [](const BigRational& c) { return c == 0; }))
            throw std::invalid_argument("product point has a zero linear form");
    }
}

std::string ProductPoint::str() const {
    std::string s;
    for (std::size_t g = 0; g < forms.size(); ++g) {
        if (g) s += " | ";
        for (std::size_t j = 0; j < forms[g].size(); ++j) {
            if (j) s += ",";
            s += forms[g][j].get_str();
        }
    }
    return s;
}

ProductPoint ProductPoint::parse(std::string_view line, const VarSignature& sig) {
    ProductPoint p;
    std::string text(line.substr(0, line.find('#')));
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, '|')) {
        std::vector<BigRational> form;
        std::stringstream entries(group);
        std::string entry;
        while (std::getline(entries, entry, ',')) {
            entry.erase(std::remove_if(entry.begin(), entry.end(), ::isspace), entry.end());
            if (entry.empty()) throw std::invalid_argument("empty coordinate in point: " + text);
            BigRational q;
            if (q.set_str(entry, 10) != 0) throw std::invalid_argument("bad rational '" + entry + "'");
            if (q.get_den() == 0) throw std::invalid_argument("zero denominator in point");
            q.canonicalize();
            form.push_back(q);
        }
        p.forms.push_back(std::move(form));
    }
    p.validate(sig);
    return p;
}

// ---------------------------------------------------------------- calculus

BigInt factorial(int n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

MultiPoly diff_apply(const MultiPoly& D, const MultiPoly& F) {
    if (D.signature() != F.signature()) throw std::invalid_argument("signature mismatch in diff_apply");
    const int N = F.signature().total();
    MultiPoly out(F.signature(), F.role());
    Exponent e(N);
    for (const auto& [a, ca] : D.terms())
        for (const auto& [b, cb] : F.terms()) {
            BigInt falling = 1;
            bool ok = true;
            for (int i = 0; i < N && ok; ++i) {
                if (b[i] < a[i]) {
                    ok = false;
                    break;
                }
                for (int k = 0; k < a[i]; ++k) falling *= (b[i] - k);
                e[i] = b[i] - a[i];
            }
            if (ok) out.add_term(e, ca * cb * falling);
        }
    return out;
}

MultiPoly linear_form(const VarSignature& sig, int group, const std::vector<BigRational>& coeffs) {
    MultiPoly p(sig);
    for (int j = 0; j < sig.size(group); ++j) {
        Exponent e(sig.total(), 0);
        e[sig.offset(group) + j] = 1;
        p.add_term(e, coeffs[j]);
    }
    return p;
}

MultiPoly power_of_point(const ProductPoint& P, const Multidegree& d, const VarSignature& sig) {
    P.validate(sig);
    if (static_cast<int>(d.size()) != sig.groups()) throw std::invalid_argument("multidegree length mismatch");
    MultiPoly result = MultiPoly::constant(sig, 1);
    for (int g = 0; g < sig.groups(); ++g) {
        MultiPoly l = linear_form(sig, g, P.forms[g]);
        MultiPoly pw = MultiPoly::constant(sig, 1);
        // binary powering keeps intermediate sizes small for high degree
        MultiPoly base = l;
        for (int k = d[g]; k > 0; k >>= 1) {
            if (k & 1) pw = pw * base;
            if (k > 1) base = base * base;
        }
        result = result * pw;
    }
    return result;
}

static void compositions_desc(int n, int total, std::vector<int>& cur, int idx,
                              std::vector<std::vector<int>>& out) {
    if (idx == n - 1) {
        cur[idx] = total;
        out.push_back(cur);
        return;
    }
    for (int k = total; k >= 0; --k) {
        cur[idx] = k;
        compositions_desc(n, total - k, cur, idx + 1, out);
    }
}

std::vector<Exponent> monomial_basis(const VarSignature& sig, const Multidegree& a) {
    if (static_cast<int>(a.size()) != sig.groups()) throw std::invalid_argument("multidegree length mismatch");
    std::vector<Exponent> out{Exponent{}};
    for (int g = 0; g < sig.groups(); ++g) {
        if (a[g] < 0) return {};
        std::vector<std::vector<int>> parts;
        std::vector<int> cur(sig.size(g));
        compositions_desc(sig.size(g), a[g], cur, 0, parts);
        std::vector<Exponent> next;
        next.reserve(out.size() * parts.size());
        for (const auto& prefix : out)
            for (const auto& p : parts) {
                Exponent e = prefix;
                e.insert(e.end(), p.begin(), p.end());
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace apolar
