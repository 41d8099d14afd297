#pragma once

#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include "core.hpp"
#include "dipole.hpp"

namespace flatband {

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_end() { skip_ws(); return i_ >= s_.size(); }
    char peek() { skip_ws(); return i_ < s_.size() ? s_[i_] : '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s_.compare(i_, w.size(), w) != 0) return false;
        i_ += w.size();
        return true;
    }
    void expect_word(const std::string& w) {
        if (!accept_word(w)) fail("expected '" + w + "'");
    }
    int number() {
        skip_ws();
        std::size_t j = i_;
        if (j < s_.size() && s_[j] == '-') ++j;
        std::size_t k = j;
        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        if (k == j) fail("expected a number");
        if (k - j > 9) fail("number too large");
        int v = std::stoi(s_.substr(i_, k - i_));
        i_ = k;
        return v;
    }
    std::string word() {
        skip_ws();
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '-' || s_[j] == '_')) ++j;
        if (j == i_) fail("expected a word");
        std::string w = s_.substr(i_, j - i_);
        i_ = j;
        return w;
    }
    char raw() { return i_ < s_.size() ? s_[i_++] : '\0'; }
    char raw_peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::parse, msg + " at offset " + std::to_string(i_));
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

inline std::vector<int> int_tuple(Cursor& c) {
    std::vector<int> v;
    c.expect('(');
    if (c.accept(')')) return v;
    for (;;) {
        v.push_back(c.number());
        if (c.accept(')')) return v;
        c.accept(',');
    }
}

// "3" or "3'"; returns {index, barred}
inline std::pair<int, bool> label(Cursor& c) {
    int k = c.number();
    bool barred = c.raw_peek() == '\'';
    if (barred) c.raw();
    return {k, barred};
}

// [2oL#0 3uR#1][1uR#0] ... one group per band
inline EventLists event_groups(Cursor& c, int n) {
    EventLists ev;
    while (c.peek() == '[') {
        c.expect('[');
        std::vector<CrossingEvent> l;
        while (!c.accept(']')) {
            CrossingEvent e;
            e.other = c.number() - 1;
            char o = c.raw(), s = c.raw();
            if ((o != 'o' && o != 'u') || (s != 'L' && s != 'R')) c.fail("event needs o|u then L|R");
            e.over = o == 'o';
            e.from_left = s == 'L';
            c.expect('#');
            e.id = c.number();
            l.push_back(e);
        }
        ev.push_back(std::move(l));
    }
    if (static_cast<int>(ev.size()) != n) c.fail("expected one event group per band");
    return ev;
}

inline std::string event_groups_string(const EventLists& ev) {
    std::string s;
    for (const auto& l : ev) {
        s += "[";
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(l[i].other + 1) + (l[i].over ? "o" : "u") + (l[i].from_left ? "L" : "R") + "#" +
                 std::to_string(l[i].id);
        }
        s += "]";
    }
    return s;
}

inline std::string tuple_string(const std::vector<int>& v, const char* sep, int add) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i] + add);
    }
    return s + ")";
}

inline SurfacePresentation parse_basket(Cursor& c) {
    c.expect('<');
    PlumbingCode code;
    code.connection = int_tuple(c);
    c.expect('|');
    code.layers = int_tuple(c);
    c.expect('>');
    if (!c.at_end()) c.fail("trailing input");
    return from_plumbing_code(code);
}

inline SurfacePresentation parse_chord(Cursor& c) {
    c.expect_word("chords:");
    std::vector<std::array<std::pair<int, bool>, 2>> chords;
    while (c.peek() == '(') {
        c.expect('(');
        auto a = label(c);
        c.accept(',');
        auto b = label(c);
        c.expect(')');
        chords.push_back({a, b});
    }
    const int n = static_cast<int>(chords.size());
    if (n == 0) c.fail("no chords");
    std::vector<BandEnd> order(2 * n, BandEnd{-1, -1});
    for (int k = 0; k < n; ++k)
        for (int e = 0; e < 2; ++e) {
            auto [idx, barred] = chords[k][e];
            if (idx < 1 || idx > n) c.fail("label out of range");
            int pos = barred ? n + idx - 1 : idx - 1;
            if (order[pos].band != -1)
                throw Error(ErrorKind::invalid_presentation, "label used twice: " + label_name(pos, n));
            order[pos] = {k, e};
        }
    c.expect(';');
    std::optional<std::vector<int>> layers;
    EventLists events;
    if (c.accept_word("layers:")) {
        auto l = int_tuple(c);
        if (static_cast<int>(l.size()) != n || !is_permutation_of_range(l, 1))
            throw Error(ErrorKind::invalid_presentation, "layers is not a permutation of 1..n");
        for (int& x : l) --x;
        layers = l;
    } else if (c.accept_word("events:")) {
        events = event_groups(c, n);
    } else {
        c.fail("expected 'layers:' or 'events:'");
    }
    Provenance prov = layers ? Provenance::chord_code : Provenance::manual;
    if (c.accept(';')) {
        c.expect_word("origin:");
        auto w = c.word();
        auto p = provenance_from_string(w);
        if (!p) c.fail("unknown origin '" + w + "'");
        prov = *p;
    }
    if (!c.at_end()) c.fail("trailing input");
    if (layers) return make_layered(std::move(order), std::move(*layers), prov);
    SurfacePresentation p;
    p.order = std::move(order);
    p.events = std::move(events);
    p.provenance = prov;
    p.unchecked_realizability = prov == Provenance::manual;
    validate(p);
    return p;
}

inline DipolePresentation parse_dipole(Cursor& c) {
    c.expect_word("dipole");
    c.expect_word("n=");
    const int n = c.number();
    if (n < 1) c.fail("n must be positive");
    c.expect(';');
    DipolePresentation d;
    d.connector = n - 1;
    if (c.accept_word("connector=")) {
        d.connector = c.number() - 1;
        c.expect(';');
    }
    c.expect_word("d1:");
    d.d1 = int_tuple(c);
    c.expect(';');
    c.expect_word("d2:");
    d.d2 = int_tuple(c);
    c.expect(';');
    c.expect_word("crossings:");
    d.events = event_groups(c, n);
    if (!c.at_end()) c.fail("trailing input");
    for (int& x : d.d1) --x;
    for (int& x : d.d2) --x;
    validate(d);
    return d;
}

} // namespace detail

using AnyPresentation = std::variant<SurfacePresentation, DipolePresentation>;

inline AnyPresentation parse_any(const std::string& text) {
    detail::Cursor c(text);
    switch (c.peek()) {
    case '<': return detail::parse_basket(c);
    case 'c': return detail::parse_chord(c);
    case 'd': return detail::parse_dipole(c);
    default: c.fail("unrecognized presentation code");
    }
}

inline SurfacePresentation parse_presentation(const std::string& text) {
    auto a = parse_any(text);
    if (auto* p = std::get_if<SurfacePresentation>(&a)) return *p;
    throw Error(ErrorKind::precondition, "expected a one-disc presentation, got a dipole code");
}

inline DipolePresentation parse_dipole_code(const std::string& text) {
    detail::Cursor c(text);
    return detail::parse_dipole(c);
}

inline std::string serialize(const SurfacePresentation& p) {
    const int n = p.band_count();
    if (p.provenance == Provenance::plumbing_code) {
        if (auto code = as_plumbing_code(p)) {
            return "<" + detail::tuple_string(code->connection, ",", 0) + "|" +
                   detail::tuple_string(code->layers, ",", 0) + ">";
        }
    }
    auto pos = end_positions(p);
    std::string s = "chords: ";
    for (int b = 0; b < n; ++b) s += "(" + label_name(pos[b][0], n) + " " + label_name(pos[b][1], n) + ")";
    if (p.layers) s += "; layers: " + detail::tuple_string(*p.layers, " ", 1);
    else s += "; events: " + detail::event_groups_string(p.events);
    const Provenance def = p.layers ? Provenance::chord_code : Provenance::manual;
    if (p.provenance != def) s += std::string("; origin: ") + to_string(p.provenance);
    return s;
}

inline std::string serialize(const DipolePresentation& d) {
    std::string s = "dipole n=" + std::to_string(d.band_count()) + "; ";
    if (d.connector != d.band_count() - 1) s += "connector=" + std::to_string(d.connector + 1) + "; ";
    s += "d1: " + detail::tuple_string(d.d1, " ", 1) + "; d2: " + detail::tuple_string(d.d2, " ", 1) +
         "; crossings: " + detail::event_groups_string(d.events);
    return s;
}

} // namespace flatband
