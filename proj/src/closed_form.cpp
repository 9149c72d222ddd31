#include "romandom/closed_form.hpp"

#include <vector>

namespace romandom {

namespace {

int ceil_div(int x, int y) { return (x + y - 1) / y; }

void check_comet(int t, int r) {
    if (t < 2) throw std::domain_error("comet closed form requires t >= 2");
    if (r < 1) throw std::domain_error("comet closed form requires r >= 1");
}

int check_double_comet(int n, int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("double comet closed form requires a, b >= 1");
    if (n < a + b + 2) throw std::domain_error("double comet closed form requires n >= a + b + 2");
    const int p = n - a - b;
    if (p == 2)
        throw ExcludedCaseError("double comet closed form is not defined for spine length p = 2");
    return p;
}

}  // namespace

int gamma_comet(int t, int r) {
    check_comet(t, r);
    if (t % 3 == 0) return 2 * (t / 3) + 1;
    return 2 * ceil_div(t, 3);
}

int gamma_double_comet(int n, int a, int b) {
    const int p = check_double_comet(n, a, b);
    switch (p % 3) {
        case 0: return 2 * (p / 3 + 1);
        case 1: return 2 * ceil_div(p, 3);
        default: return 2 * ceil_div(p, 3) + 1;
    }
}

int gamma_comb(int n) {
    if (n < 1) throw std::domain_error("comb closed form requires n >= 1");
    switch (n % 3) {
        case 0: return 4 * (n / 3);
        case 1: return 4 * (n / 3) + 2;
        default: return 4 * ceil_div(n, 3) - 1;
    }
}

bool comet_has_subcases(int t) { return t % 3 == 1; }

bool comb_has_subcases(int n) { return n % 3 != 0; }

Labeling construct_comet(int t, int r, Subcase sub) {
    check_comet(t, r);
    if (sub == Subcase::ii && !comet_has_subcases(t))
        throw std::domain_error("comet has an alternative labeling only when t = 1 (mod 3)");
    Labeling f = Labeling::zeros(t + r);
    // 1-based spine positions 1, 4, 7, ... up to `last` take label 2.
    auto protect_run = [&](int last) {
        for (int pos = 1; pos <= last; pos += 3) f.set(pos - 1, 2);
    };
    switch (t % 3) {
        case 0:
            protect_run(t - 2);
            f.set(t - 1, 1);  // v_t
            break;
        case 1:
            if (sub == Subcase::i) {
                protect_run(t - 3);
                f.set(t - 2, 2);  // v_{t-1}; placing 2 on v_t instead works too
            } else {
                protect_run(t - 3);
                f.set(t - 2, 1);  // v_{t-1}
                f.set(t - 1, 1);  // v_t
            }
            break;
        default:  // t = 2 (mod 3)
            protect_run(t - 1);
            break;
    }
    return f;
}

Labeling construct_double_comet(int n, int a, int b) {
    const int p = check_double_comet(n, a, b);
    Labeling f = Labeling::zeros(n);
    auto protect_run = [&](int last) {
        for (int pos = 1; pos <= last; pos += 3) f.set(pos - 1, 2);
    };
    switch (p % 3) {
        case 0: protect_run(p - 2); break;
        case 1: protect_run(p - 3); break;
        default:
            protect_run(p - 4);
            f.set(p - 3, 1);  // k_{p-2}
            break;
    }
    f.set(p - 1, 2);  // k_p covers the b-side leaves
    return f;
}

Labeling construct_comb(int n, Subcase sub) {
    gamma_comb(n);  // domain check
    const int res = n % 3;
    if (sub == Subcase::ii && !comb_has_subcases(n))
        throw std::domain_error("comb has an alternative labeling only when n = 1 or 2 (mod 3)");
    // The single spine vertex makes both alternatives collapse to one form.
    if (n == 1) sub = Subcase::i;

    // Spine positions are 0-based here and coincide with vertex ids
    // (generator name v_{q+1} sits on id q); the pendant of position q is
    // id n + q. This is the one place that translation happens.
    Labeling f = Labeling::zeros(2 * n);
    std::vector<char> protected_spine(static_cast<size_t>(n), 0);
    auto take2 = [&](int pos) {
        protected_spine[static_cast<size_t>(pos)] = 1;
        f.set(pos, 2);
    };

    const int run_end = res == 0 ? n - 2 : (res == 1 ? n - 3 : n - 4);
    for (int pos = 1; pos <= run_end; pos += 3) take2(pos);
    if (res == 1) {
        if (sub == Subcase::i) take2(n - 1);
        else f.set(n - 1, 1);  // spine tail pairs with its pendant below
    } else if (res == 2) {
        take2(sub == Subcase::i ? n - 1 : n - 2);
    }
    // Every pendant without a protected spine vertex must carry 1.
    for (int pos = 0; pos < n; ++pos)
        if (!protected_spine[static_cast<size_t>(pos)]) f.set(n + pos, 1);
    return f;
}

}  // namespace romandom
