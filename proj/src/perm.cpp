#include "sqt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace sqt {

Perm::Perm(int n) : img_(n) {
    if (n < 0) fail(Errc::invalid_argument, "negative degree");
    std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int x : images) {
        if (x < 0 || x >= n || seen[x]) fail(Errc::invalid_argument, "images do not form a bijection");
        seen[x] = 1;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::from_images1(const std::vector<int>& images1) {
    std::vector<int> img(images1.size());
    for (size_t i = 0; i < images1.size(); ++i) img[i] = images1[i] - 1;
    return from_images(std::move(img));
}

Perm Perm::cycle(int n, const std::vector<int>& symbols1) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    const size_t k = symbols1.size();
    for (size_t i = 0; i < k; ++i) {
        int a = symbols1[i] - 1, b = symbols1[(i + 1) % k] - 1;
        if (a < 0 || a >= n || b < 0 || b >= n) fail(Errc::invalid_argument, "cycle symbol out of range");
        img[a] = b;
    }
    return from_images(std::move(img));
}

Perm Perm::parse(std::string_view text, int degree) {
    std::vector<std::vector<int>> cyc;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    int largest = 0;
    skip();
    while (i < text.size()) {
        if (text[i] != '(') fail(Errc::parse, "expected '(' in cycle notation: " + std::string(text));
        ++i;
        std::vector<int> c;
        skip();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                fail(Errc::parse, "bad symbol in cycle notation: " + std::string(text));
            int x = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                x = x * 10 + (text[i] - '0');
                if (x > 1000000) fail(Errc::parse, "symbol too large");
                ++i;
            }
            if (x < 1) fail(Errc::parse, "symbols are 1-based");
            c.push_back(x);
            largest = std::max(largest, x);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip();
            }
        }
        if (i >= text.size()) fail(Errc::parse, "unterminated cycle: " + std::string(text));
        ++i;
        skip();
        cyc.push_back(std::move(c));
    }
    if (degree == 0) degree = largest;
    if (largest > degree) fail(Errc::parse, "symbol exceeds degree");
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(degree, 0);
    for (const auto& c : cyc) {
        for (size_t k = 0; k < c.size(); ++k) {
            int a = c[k] - 1;
            if (used[a]) fail(Errc::parse, "symbol repeated in cycle notation: " + std::to_string(c[k]));
            used[a] = 1;
            img[a] = c[(k + 1) % c.size()] - 1;
        }
    }
    return from_images(std::move(img));
}

std::vector<int> Perm::images1() const {
    std::vector<int> r(img_);
    for (int& x : r) ++x;
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::string Perm::str() const {
    std::string out;
    for (const auto& c : cycles(*this)) {
        if (c.size() < 2) continue;
        out += '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(c[k] + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) fail(Errc::invalid_argument, "degree mismatch");
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[i] = p(q(i));
    return Perm::from_images(std::move(r));
}

Perm inverse(const Perm& p) {
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[p(i)] = i;
    return Perm::from_images(std::move(r));
}

Perm power(const Perm& p, long k) {
    Perm base = k < 0 ? inverse(p) : p;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Perm acc(p.degree());
    while (e) {
        if (e & 1) acc = compose(base, acc);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

Perm commutator(const Perm& h, const Perm& v) {
    return compose(compose(h, v), compose(inverse(h), inverse(v)));
}

std::vector<std::vector<int>> cycles(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> t;
    for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool is_transitive(const Perm& h, const Perm& v) {
    if (h.degree() != v.degree()) fail(Errc::invalid_argument, "degree mismatch");
    const int n = h.degree();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {h(x), v(x)}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

namespace {

struct Dsu {
    std::vector<int> parent, size;
    explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

// Block of the smallest invariant partition in which a and b share a block.
int minimal_block_size(const Perm& h, const Perm& v, int a, int b) {
    const int n = h.degree();
    Dsu d(n);
    std::vector<std::pair<int, int>> queue{{a, b}};
    d.join(a, b);
    for (size_t k = 0; k < queue.size(); ++k) {
        auto [x, y] = queue[k];
        for (const Perm* g : {&h, &v}) {
            int gx = (*g)(x), gy = (*g)(y);
            if (d.join(gx, gy)) queue.emplace_back(gx, gy);
        }
    }
    return d.size[d.find(a)];
}

}  // namespace

bool is_primitive(const Perm& h, const Perm& v) {
    if (!is_transitive(h, v)) fail(Errc::precondition, "is_primitive requires a transitive pair");
    const int n = h.degree();
    for (int b = 1; b < n; ++b)
        if (minimal_block_size(h, v, 0, b) != n) return false;
    return true;
}

Perm relabel(const Perm& p, const Perm& sigma) {
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[sigma(i)] = sigma(p(i));
    return Perm::from_images(std::move(r));
}

}  // namespace sqt
