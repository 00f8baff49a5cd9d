// Times each parallel kernel against its serial reference and checks that
// the outputs are identical, which the library promises bit for bit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sepfam/builders.hpp"
#include "sepfam/constructions.hpp"
#include "sepfam/geometry.hpp"
#include "sepfam/io.hpp"
#include "sepfam/oracle.hpp"

namespace {

using namespace sepfam;

double time_ms(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string trace_fingerprint(const TraceSet& t) {
    std::string fp = std::to_string(t.masks.size());
    SeparatingFamily fam;
    fam.separators = t.witnesses;
    fp += '|';
    for (std::uint32_t m : t.masks) fp += std::to_string(m) + ',';
    fp += '|';
    fp += serialize_family(fam);
    return fp;
}

bool g_all_match = true;

void report(const std::string& name, std::size_t n, double serial_ms, double parallel_ms,
            bool match) {
    std::printf("%-24s n=%-5zu serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
                name.c_str(), n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "identical" : "MISMATCH");
    g_all_match = g_all_match && match;
}

}  // namespace

int main() {
    {
        const PointSet x = random_general_position(160, 1);
        Rational a, b;
        const double ts = time_ms([&] { a = clearance_serial(x); });
        const double tp = time_ms([&] { b = clearance(x); });
        report("clearance", x.size(), ts, tp, a == b);
    }
    {
        const PointSet x = random_general_position(400, 2);
        std::vector<std::size_t> a, b;
        const double ts = time_ms([&] { a = largest_convex_subset_serial(x); });
        const double tp = time_ms([&] { b = largest_convex_subset(x); });
        report("largest_convex_subset", x.size(), ts, tp, a == b);
    }
    {
        const PointSet x = random_general_position(20, 3);
        TraceSet a, b;
        const double ts = time_ms([&] { a = halfplane_traces_serial(x); });
        const double tp = time_ms([&] { b = halfplane_traces(x); });
        report("halfplane_traces", x.size(), ts, tp, trace_fingerprint(a) == trace_fingerprint(b));
    }
    {
        const PointSet x = random_general_position(16, 4);
        TraceSet a, b;
        const double ts = time_ms([&] { a = disc_traces_serial(x); });
        const double tp = time_ms([&] { b = disc_traces(x); });
        report("disc_traces", x.size(), ts, tp, trace_fingerprint(a) == trace_fingerprint(b));
    }
    {
        const PointSet x = random_general_position(14, 5);
        TraceSet a, b;
        const double ts = time_ms([&] { a = convex_traces_serial(x); });
        const double tp = time_ms([&] { b = convex_traces(x); });
        report("convex_traces", x.size(), ts, tp, trace_fingerprint(a) == trace_fingerprint(b));
    }
    return g_all_match ? 0 : 1;
}
