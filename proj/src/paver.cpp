#include "tdoa/paver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace tdoa {

namespace {

bool box_less(const IntervalBox& a, const IntervalBox& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].lo() != b[i].lo()) return a[i].lo() < b[i].lo();
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].hi() != b[i].hi()) return a[i].hi() < b[i].hi();
    }
    return false;
}

struct SharedState {
    std::vector<IntervalBox> stack;
    std::mutex m;
    std::condition_variable cv;
    int active = 0;
    std::vector<IntervalBox> inside, outside, boundary;
    std::size_t n_bisections = 0;
};

void worker(const Separator& s, double eps, SharedState& st) {
    std::vector<IntervalBox> local_in, local_out, local_bnd;
    std::size_t local_bis = 0;
    for (;;) {
        IntervalBox box;
        {
            std::unique_lock<std::mutex> lk(st.m);
            st.cv.wait(lk, [&] { return !st.stack.empty() || st.active == 0; });
            if (st.stack.empty()) break;
            box = st.stack.back();
            st.stack.pop_back();
            ++st.active;
        }
        const IntervalBox t = s.outer(box);
        for (auto& piece : box_diff(box, t)) local_out.push_back(std::move(piece));
        if (!t.is_empty()) {
            const IntervalBox u = s.inner(t);
            for (auto& piece : box_diff(t, u)) local_in.push_back(std::move(piece));
            if (!u.is_empty()) {
                if (u.width() <= eps) {
                    local_bnd.push_back(u);
                } else {
                    ++local_bis;
                    auto [lo, hi] = bisect(u);
                    std::lock_guard<std::mutex> lk(st.m);
                    st.stack.push_back(std::move(hi));
                    st.stack.push_back(std::move(lo));  // popped first: lower half
                    st.cv.notify_all();
                }
            }
        }
        {
            std::lock_guard<std::mutex> lk(st.m);
            --st.active;
            if (st.active == 0 && st.stack.empty()) st.cv.notify_all();
        }
    }
    std::lock_guard<std::mutex> lk(st.m);
    st.inside.insert(st.inside.end(), local_in.begin(), local_in.end());
    st.outside.insert(st.outside.end(), local_out.begin(), local_out.end());
    st.boundary.insert(st.boundary.end(), local_bnd.begin(), local_bnd.end());
    st.n_bisections += local_bis;
}

}  // namespace

Paving pave(const Separator& s, const IntervalBox& frame, double eps, int threads) {
    if (eps <= 0.0) throw std::invalid_argument("pave: eps must be positive");
    if (frame.is_empty()) throw std::invalid_argument("pave: empty frame");
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (!std::isfinite(frame[i].lo()) || !std::isfinite(frame[i].hi()))
            throw std::invalid_argument("pave: non-finite frame");
    if (threads < 1) threads = 1;

    const auto t0 = std::chrono::steady_clock::now();
    SharedState st;
    st.stack.push_back(frame);
    if (threads == 1) {
        worker(s, eps, st);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back([&] { worker(s, eps, st); });
        for (auto& th : pool) th.join();
    }

    Paving p;
    p.inside = std::move(st.inside);
    p.outside = std::move(st.outside);
    p.boundary = std::move(st.boundary);
    std::sort(p.inside.begin(), p.inside.end(), box_less);
    std::sort(p.outside.begin(), p.outside.end(), box_less);
    std::sort(p.boundary.begin(), p.boundary.end(), box_less);
    p.eps = eps;
    p.frame = frame;
    p.stats.n_inside = p.inside.size();
    p.stats.n_outside = p.outside.size();
    p.stats.n_boundary = p.boundary.size();
    p.stats.n_bisections = st.n_bisections;
    p.stats.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return p;
}

PointClass paving_contains(const Paving& p, Vec2 x) {
    const std::vector<double> pt{x.x, x.y};
    const IntervalBox* best = nullptr;
    PointClass cls = PointClass::Maybe;
    auto scan = [&](const std::vector<IntervalBox>& list, PointClass c) {
        for (const auto& b : list) {
            if (!b.contains(pt)) continue;
            if (!best || box_less(b, *best)) { best = &b; cls = c; }
        }
    };
    scan(p.inside, PointClass::In);
    scan(p.outside, PointClass::Out);
    scan(p.boundary, PointClass::Maybe);
    if (!best) throw std::out_of_range("paving_contains: point outside frame");
    return cls;
}

namespace {
void write_records(std::ostream& os, const std::vector<IntervalBox>& list,
                   const char* cls) {
    char buf[256];
    for (const auto& b : list) {
        std::snprintf(buf, sizeof buf, "%s %.17g %.17g %.17g %.17g\n", cls,
                      b[0].lo(), b[0].hi(), b[1].lo(), b[1].hi());
        os << buf;
    }
}
}  // namespace

void write_paving(std::ostream& os, const Paving& p) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "# paving v1 eps=%.17g frame=%s\n", p.eps,
                  to_string(p.frame).c_str());
    os << buf;
    write_records(os, p.inside, "IN");
    write_records(os, p.outside, "OUT");
    write_records(os, p.boundary, "MAYBE");
}

Paving read_paving(std::istream& is) {
    Paving p;
    std::string line;
    if (!std::getline(is, line) || line.rfind("# paving v1", 0) != 0)
        throw std::runtime_error("read_paving: bad header");
    const auto epos = line.find("eps=");
    const auto fpos = line.find("frame=");
    if (epos == std::string::npos || fpos == std::string::npos)
        throw std::runtime_error("read_paving: bad header");
    p.eps = std::stod(line.substr(epos + 4));
    double a, b, c, d;
    if (std::sscanf(line.c_str() + fpos, "frame=[%lf,%lf]x[%lf,%lf]", &a, &b, &c,
                    &d) != 4)
        throw std::runtime_error("read_paving: bad frame");
    p.frame = IntervalBox(Interval(a, b), Interval(c, d));
    std::string cls;
    while (is >> cls >> a >> b >> c >> d) {
        IntervalBox box(Interval(a, b), Interval(c, d));
        if (cls == "IN") p.inside.push_back(box);
        else if (cls == "OUT") p.outside.push_back(box);
        else if (cls == "MAYBE") p.boundary.push_back(box);
        else throw std::runtime_error("read_paving: bad class " + cls);
    }
    p.stats.n_inside = p.inside.size();
    p.stats.n_outside = p.outside.size();
    p.stats.n_boundary = p.boundary.size();
    return p;
}

namespace {
void svg_rects(std::ostream& os, const std::vector<IntervalBox>& list,
               const char* fill, const char* extra = "") {
    char buf[320];
    for (const auto& b : list) {
        // y axis flipped: box [x2lo,x2hi] renders at y = -x2hi.
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.10g\" y=\"%.10g\" width=\"%.10g\" "
                      "height=\"%.10g\" fill=\"%s\"%s/>\n",
                      b[0].lo(), -b[1].hi(), b[0].width(), b[1].width(), fill,
                      extra);
        os << buf;
    }
}

void svg_open(std::ostream& os, const IntervalBox& frame) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                  "viewBox=\"%.10g %.10g %.10g %.10g\" width=\"800\" "
                  "height=\"800\">\n",
                  frame[0].lo(), -frame[1].hi(), frame[0].width(),
                  frame[1].width());
    os << buf;
}
}  // namespace

void write_svg(std::ostream& os, const Paving& p) {
    svg_open(os, p.frame);
    svg_rects(os, p.outside, "#4a90d9");
    svg_rects(os, p.inside, "#d62828");
    svg_rects(os, p.boundary, "#f4d35e");
    os << "</svg>\n";
}

void write_svg_layers(std::ostream& os, const std::vector<Paving>& levels) {
    if (levels.empty()) return;
    svg_open(os, levels.front().frame);
    // Largest level first so tighter cuts overpaint it.
    for (std::size_t k = levels.size(); k-- > 0;) {
        const double shade = 0.15 + 0.85 * (1.0 - double(k) / levels.size());
        char extra[64];
        std::snprintf(extra, sizeof extra, " fill-opacity=\"%.3f\"", shade);
        svg_rects(os, levels[k].inside, "#d62828", extra);
        svg_rects(os, levels[k].boundary, "#f4d35e", extra);
    }
    os << "</svg>\n";
}

}  // namespace tdoa
