// Copyright 2026 The dbreg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dbreg/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <queue>

namespace dbreg {

namespace {

struct Panel {
    double a, b;
    Complex value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel estimate(const std::function<Complex(double)>& f, double a, double b) {
    using boost::math::quadrature::gauss;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    auto g = [&](double x) { return f(c + h * x); };
    Complex lo = gauss<double, 10>::integrate(g, -1.0, 1.0) * h;
    Complex hi = gauss<double, 20>::integrate(g, -1.0, 1.0) * h;
    return {a, b, hi, std::abs(hi - lo)};
}

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b, double abs_tol,
                           const std::vector<double>& breaks, int max_panels) {
    QuadratureResult res;
    if (a == b) return res;
    std::vector<double> pts{a};
    for (double x : breaks)
        if (x > std::min(a, b) && x < std::max(a, b)) pts.push_back(x);
    pts.push_back(b);
    if (a < b)
        std::sort(pts.begin(), pts.end());
    else
        std::sort(pts.begin(), pts.end(), std::greater<>());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::priority_queue<Panel> queue;
    Complex total = 0;
    double err = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        Panel p = estimate(f, pts[k], pts[k + 1]);
        total += p.value;
        err += p.error;
        queue.push(p);
    }
    int count = static_cast<int>(queue.size());
    while (err > abs_tol && count < max_panels) {
        Panel p = queue.top();
        queue.pop();
        const double m = 0.5 * (p.a + p.b);
        if (m == p.a || m == p.b) {
            queue.push(p);
            break;
        }
        Panel l = estimate(f, p.a, m), r = estimate(f, m, p.b);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        queue.push(l);
        queue.push(r);
        ++count;
    }
    // recompute the sums to shed accumulated rounding
    total = 0;
    err = 0;
    while (!queue.empty()) {
        total += queue.top().value;
        err += queue.top().error;
        queue.pop();
    }
    res.value = total;
    res.error = err;
    res.panels = count;
    res.converged = err <= abs_tol;
    return res;
}

}  // namespace dbreg
