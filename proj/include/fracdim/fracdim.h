/*
Copyright 2026 The fracdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


/* C interface to the fracdim library. All handles are opaque; every call
   that can fail returns an fd_status and leaves a message for
   fd_last_error() on the calling thread. */

#ifndef FRACDIM_H
#define FRACDIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FD_API __declspec(dllexport)
#else
#define FD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
    FD_OK = 0,
    FD_ERR_PARSE = 1,
    FD_ERR_PRECONDITION = 2,
    FD_ERR_SIZE_LIMIT = 3,
    FD_ERR_RESOURCE = 4,
    FD_ERR_INVALID_ARGUMENT = 5,
    FD_ERR_IO = 6,
    FD_ERR_INTERNAL = 7
} fd_status;

typedef struct fd_graph fd_graph;
typedef struct fd_report fd_report;

FD_API const char* fd_version(void);
/* Message of the last failed call on this thread, "" if none. */
FD_API const char* fd_last_error(void);
FD_API const char* fd_status_name(fd_status s);

/* --- Graphs --- */

/* Edge-list text: one "u v" per line, '#' comments, single token = isolated vertex. */
FD_API fd_status fd_graph_parse(const char* text, size_t len, fd_graph** out);
FD_API fd_status fd_graph_read_file(const char* path, fd_graph** out);
/* {"family": ..., "params": {...}, "seed": ...} */
FD_API fd_status fd_graph_generate(const char* spec_json, fd_graph** out);
FD_API void fd_graph_free(fd_graph* g);
FD_API int fd_graph_vertices(const fd_graph* g);
FD_API size_t fd_graph_edges(const fd_graph* g);
/* Edge-list text of g; release with fd_string_free. */
FD_API fd_status fd_graph_to_text(const fd_graph* g, char** out);
FD_API void fd_string_free(char* s);

/* --- Reports --- */

FD_API const char* fd_report_json(const fd_report* r);
/* Runtimes and other run-dependent data; "{}" when there is none. */
FD_API const char* fd_report_meta(const fd_report* r);
/* Row table for experiments, "" otherwise. */
FD_API const char* fd_report_csv(const fd_report* r);
/* Nonzero when the limits left the question undecided. */
FD_API int fd_report_unresolved(const fd_report* r);
FD_API void fd_report_free(fd_report* r);

/* --- Analyses --- */

typedef struct fd_analyze_options {
    double time_limit_s;
    int whole_graph;
    int fast_paths;
    int witness;
} fd_analyze_options;

FD_API void fd_analyze_options_init(fd_analyze_options* o);

FD_API fd_status fd_dims(const fd_graph* g, const fd_analyze_options* o, fd_report** out);
FD_API fd_status fd_fractal(const fd_graph* g, const fd_analyze_options* o, fd_report** out);

/* measure != 0 computes the d-measure (volume of the complement).
   size_budget 0 means a complete search. */
FD_API fd_status fd_volume(const fd_graph* g, int d, int size_budget, int measure, int witness, fd_report** out);

/* top_k < 0 keeps every community. */
FD_API fd_status fd_communities(const fd_graph* g, const char* text, size_t len, long top_k, double time_limit_s,
                                fd_report** out);

FD_API fd_status fd_reduce_cubic(const fd_graph* g, uint64_t node_budget, int prune, fd_report** out);

/* Config JSON as documented in the README; the report carries the summary
   JSON, the CSV rows and the runtime metadata. */
FD_API fd_status fd_experiment(const char* config_json, fd_report** out);

#ifdef __cplusplus
}
#endif

#endif
