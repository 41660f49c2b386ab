#ifndef TVX_JOBS_HPP
#define TVX_JOBS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tvx {

// Fully determined work order: identical JobSpec -> byte-identical output.
struct JobSpec {
    std::string command;  // wallfn|scatter|greedy|theta|clustervar|gw|check|render
    std::string p1, p2;   // initial wall functions (expressions)
    std::vector<std::string> extra_lines;  // "a,b:expr" additional initial lines
    int a = 0, b = 0;                      // ray direction
    long a1 = 0, a2 = 0;                   // greedy element index
    int m0x = 0, m0y = 0;                  // theta exponent
    int k = 0;                             // cluster variable index
    int ell1 = 0, ell2 = 0;                // symbolic degrees
    int order = 8;
    std::string method = "tight";  // wallfn/scatter: tight|oracle
    bool with_gradings = false;    // wallfn: include the tight gradings per k
    bool with_lines = false;       // theta: include the broken-line dumps
    std::string qx, qy;            // optional endpoint (exact rationals)
    std::string format = "json";   // json|csv|text|svg
    std::string out_path;          // empty: stdout
    int threads = 1;
    // render parameters
    std::string kind;  // grading|diagram
    int m = 0, n = 0;
    std::string horiz, vert;  // comma-separated grading values
};

// exit code: 0 success, 1 check failure, 2 usage error
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);
// convenience wrapper honoring out_path
int run_job(const JobSpec& job);

int default_thread_count();  // TVX_THREADS when set, else 1

}  // namespace tvx

#endif
