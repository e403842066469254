#include "bosim/fock.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bosim {

int total_photons(const FockState& s) {
    int n = 0;
    for (int v : s) {
        require(v >= 0, "fock-state", "occupations must be non-negative");
        n += v;
    }
    return n;
}

double factorial(int n) {
    require(n >= 0, "fock-state", "factorial of a negative number");
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double occupation_factorial(const FockState& s) {
    double f = 1.0;
    for (int v : s) f *= factorial(v);
    return f;
}

namespace {

void enumerate_rec(int modes_left, int photons_left, bool collision_free,
                   FockState& prefix, std::vector<FockState>& out) {
    if (modes_left == 0) {
        if (photons_left == 0) out.push_back(prefix);
        return;
    }
    int cap = collision_free ? std::min(photons_left, 1) : photons_left;
    for (int v = 0; v <= cap; ++v) {
        prefix.push_back(v);
        enumerate_rec(modes_left - 1, photons_left - v, collision_free, prefix,
                      out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<FockState> enumerate_states(int m, int n, bool collision_free) {
    require(m >= 1, "invalid-dimension", "mode count must be at least 1");
    require(n >= 0, "fock-state", "photon number must be non-negative");
    std::vector<FockState> out;
    FockState prefix;
    prefix.reserve(m);
    enumerate_rec(m, n, collision_free, prefix, out);
    return out; // recursion emits ascending lexicographic order
}

FockState parse_state(const std::string& text) {
    FockState s;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
                require(pos == tok.size() && v >= 0, "parse", "");
                s.push_back(v);
            } catch (const Error&) {
                throw Error("parse", "bad occupation token '" + tok + "'");
            } catch (const std::exception&) {
                throw Error("parse", "bad occupation token '" + tok + "'");
            }
        }
    } else {
        for (char c : text) {
            require(std::isdigit(static_cast<unsigned char>(c)) != 0, "parse",
                    std::string("bad occupation digit '") + c + "'");
            s.push_back(c - '0');
        }
    }
    require(!s.empty(), "parse", "empty occupation state");
    return s;
}

std::string format_state(const FockState& s) {
    bool compact = std::all_of(s.begin(), s.end(), [](int v) { return v <= 9; });
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!compact && k) out += ',';
        out += std::to_string(s[k]);
    }
    return out;
}

} // namespace bosim
