#include "agsync/fixtures.hpp"

#include "agsync/errors.hpp"

namespace agsync {

Automaton cerny(std::size_t n) {
    if (n < 2)
        throw DomainTooSmall("the Černý fixture needs n >= 2");
    std::vector<State> delta(n * 2);
    for (State q = 0; q < n; ++q) {
        delta[q * 2] = q == 0 ? 1 : q;
        delta[q * 2 + 1] = static_cast<State>((q + 1) % n);
    }
    return Automaton(n, 2, std::move(delta));
}

Automaton fig1() {
    const std::vector<State> a{2, 5, 3, 6, 5, 4, 0};
    const std::vector<State> b{2, 3, 6, 1, 5, 4, 0};
    return Automaton::from_letter_maps({a, b});
}

std::vector<std::string> fixture_names() { return {"cerny", "fig1"}; }

Automaton fixture(std::string_view name, std::size_t n) {
    if (name == "cerny")
        return cerny(n);
    if (name == "fig1")
        return fig1();
    throw UnknownFixture("unknown fixture \"" + std::string(name) + "\"");
}

} // namespace agsync
