#include "twistknot/foxwada.hpp"

#include <cstdlib>
#include <sstream>

namespace twistknot {

FreeWord FreeWord::generator(Gen g, int exp) {
    FreeWord w;
    w.append(g, exp);
    return w;
}

size_t FreeWord::letter_count() const {
    size_t n = 0;
    for (const Letter& l : letters_) n += static_cast<size_t>(std::abs(l.exp));
    return n;
}

int FreeWord::exponent_sum(Gen g) const {
    int s = 0;
    for (const Letter& l : letters_)
        if (l.gen == g) s += l.exp;
    return s;
}

int FreeWord::exponent_sum() const {
    int s = 0;
    for (const Letter& l : letters_) s += l.exp;
    return s;
}

void FreeWord::append(Gen g, int exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == g) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({g, exp});
}

FreeWord FreeWord::operator*(const FreeWord& w) const {
    FreeWord r = *this;
    for (const Letter& l : w.letters_) r.append(l.gen, l.exp);
    return r;
}

FreeWord FreeWord::inverse() const {
    FreeWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.append(it->gen, -it->exp);
    return r;
}

FreeWord FreeWord::pow(int k) const {
    const FreeWord base = (k < 0) ? inverse() : *this;
    FreeWord r;
    for (int i = 0; i < std::abs(k); ++i) r = r * base;
    return r;
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first) out << " ";
        first = false;
        out << (l.gen == Gen::x ? "x" : "y");
        if (l.exp != 1) out << "^" << l.exp;
    }
    return out.str();
}

void GroupRingElement::add(const FreeWord& w, int coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

int GroupRingElement::coeff(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& e) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : e.terms_) r.add(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& e) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : e.terms_) r.add(w, -c);
    return r;
}

GroupRingElement GroupRingElement::left_mul(const FreeWord& w) const {
    GroupRingElement r;
    for (const auto& [word, c] : terms_) r.add(w * word, c);
    return r;
}

FreeWord twist_word() {
    FreeWord w;
    w.append(Gen::y, 1);
    w.append(Gen::x, -1);
    w.append(Gen::y, -1);
    w.append(Gen::x, 1);
    return w;
}

FreeWord relator(int q) {
    if (q == 0) throw InvalidQ();
    const FreeWord wq = twist_word().pow(q);
    return wq * FreeWord::generator(Gen::x) * wq.inverse() * FreeWord::generator(Gen::y, -1);
}

GroupRingElement fox_derivative(const FreeWord& w, Gen g) {
    GroupRingElement result;
    FreeWord prefix;
    for (const Letter& l : w.letters()) {
        const int step = (l.exp > 0) ? 1 : -1;
        for (int i = 0; i < std::abs(l.exp); ++i) {
            if (l.gen == g) {
                if (step > 0) {
                    result.add(prefix, 1);
                } else {
                    result.add(prefix * FreeWord::generator(g, -1), -1);
                }
            }
            prefix.append(l.gen, step);
        }
    }
    return result;
}

bool relation_check(int q, const AlgebraicNumber& u) {
    if (q == 0) throw InvalidQ();
    const Rep2<AlgebraicNumber> rep = Rep2<AlgebraicNumber>::parabolic(u);
    const RingMatrix2<AlgebraicNumber> wq = word_image(twist_word().pow(q), rep);
    return (wq * rep.x) == (rep.y * wq);
}

bool wada_matches_closed_form(int q) {
    const NumberFieldPtr field = NumberField::create(riley(q));
    const LaurentPoly<AlgebraicNumber> wada = wada_polynomial(q, field->generator());

    const TwistedAlexander ta = twisted_alexander(q);
    const AlgebraicNumber gamma = field->element(ta.gamma);
    const AlgebraicNumber delta = field->element(ta.delta);
    const LaurentPoly<AlgebraicNumber> closed(0, {gamma, delta, gamma});

    return wada == closed || wada == -closed;
}

}  // namespace twistknot
