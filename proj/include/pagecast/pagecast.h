#ifndef PAGECAST_H
#define PAGECAST_H

/*
 * pagecast — web access log mining and next-page prediction.
 *
 * C API over the pagecast core. All objects are opaque handles created and
 * destroyed through this interface; every fallible call returns a
 * pagecast_status and reports details through pagecast_last_error(), which
 * is thread-local. Pointers returned through const char ** out-parameters
 * are owned by the handle they were obtained from and stay valid until that
 * handle is freed.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PAGECAST_API __declspec(dllexport)
#else
#  define PAGECAST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pagecast_status {
  PAGECAST_OK = 0,
  PAGECAST_ERR_IO = 1,
  PAGECAST_ERR_PARSE = 2,
  PAGECAST_ERR_INVALID_ARG = 3,
  PAGECAST_ERR_NO_DATA = 4,
  PAGECAST_ERR_VERSION = 5,
  PAGECAST_ERR_UNDEFINED_STATE = 6,
  PAGECAST_ERR_INTERNAL = 7
} pagecast_status;

typedef struct pagecast_config pagecast_config;
typedef struct pagecast_dataset pagecast_dataset;
typedef struct pagecast_model pagecast_model;

PAGECAST_API const char *pagecast_status_name(pagecast_status s);

/* Message for the most recent failing call on this thread. Never NULL. */
PAGECAST_API const char *pagecast_last_error(void);

/* ------------------------------------------------------------------ */
/* Configuration                                                      */
/* ------------------------------------------------------------------ */

/* A new config carries the documented defaults: clf input, 30 min session
 * timeout, max session length 100, cluster threshold 0.3, alpha1/alpha2 0.2,
 * min support/confidence 0, train split 0.8, seed 1, cache size 1. */
PAGECAST_API pagecast_config *pagecast_config_new(void);
PAGECAST_API void pagecast_config_free(pagecast_config *cfg);

/* format is "clf" or "csv". */
PAGECAST_API pagecast_status pagecast_config_set_format(pagecast_config *cfg, const char *format);
PAGECAST_API pagecast_status pagecast_config_set_csv_header(pagecast_config *cfg, int has_header);
PAGECAST_API pagecast_status pagecast_config_set_session_timeout(pagecast_config *cfg, double minutes);
PAGECAST_API pagecast_status pagecast_config_set_max_session_len(pagecast_config *cfg, uint32_t n);
PAGECAST_API pagecast_status pagecast_config_set_cluster_threshold(pagecast_config *cfg, double t);
PAGECAST_API pagecast_status pagecast_config_set_no_cluster(pagecast_config *cfg, int enabled);
PAGECAST_API pagecast_status pagecast_config_set_alpha1(pagecast_config *cfg, double alpha);
PAGECAST_API pagecast_status pagecast_config_set_alpha2(pagecast_config *cfg, double alpha);
PAGECAST_API pagecast_status pagecast_config_set_min_support(pagecast_config *cfg, double v);
PAGECAST_API pagecast_status pagecast_config_set_min_confidence(pagecast_config *cfg, double v);
PAGECAST_API pagecast_status pagecast_config_set_fallback_popular(pagecast_config *cfg, int enabled);
PAGECAST_API pagecast_status pagecast_config_set_train_split(pagecast_config *cfg, double fraction);
PAGECAST_API pagecast_status pagecast_config_set_seed(pagecast_config *cfg, uint64_t seed);
PAGECAST_API pagecast_status pagecast_config_set_cache_size(pagecast_config *cfg, uint32_t k);
PAGECAST_API pagecast_status pagecast_config_set_self_test(pagecast_config *cfg, int enabled);

/* ------------------------------------------------------------------ */
/* Datasets                                                           */
/* ------------------------------------------------------------------ */

/* Parse, normalize, filter and sessionize one or more log files. */
PAGECAST_API pagecast_status pagecast_dataset_load(const pagecast_config *cfg,
                                                   const char *const *paths, size_t n_paths,
                                                   pagecast_dataset **out);
PAGECAST_API void pagecast_dataset_free(pagecast_dataset *ds);

PAGECAST_API size_t pagecast_dataset_record_count(const pagecast_dataset *ds);
PAGECAST_API size_t pagecast_dataset_session_count(const pagecast_dataset *ds);
PAGECAST_API size_t pagecast_dataset_page_count(const pagecast_dataset *ds);

/* Write the normalized, filtered records as 7-column CSV. path "-" is stdout. */
PAGECAST_API pagecast_status pagecast_dataset_dump_csv(const pagecast_dataset *ds, const char *path);

typedef struct pagecast_synth_spec {
  uint32_t n_pages;         /* >= 2 */
  double dominant_prob;     /* in (1/n_pages, 1] */
  uint64_t n_sessions;
  double session_len_mean;  /* >= 2 */
  double zipf_exponent;     /* 0 = uniform start pages */
  uint64_t seed;
} pagecast_synth_spec;

/* Generate a planted-chain synthetic dataset. Deterministic in seed. */
PAGECAST_API pagecast_status pagecast_dataset_generate(const pagecast_synth_spec *spec,
                                                       pagecast_dataset **out);

/* ------------------------------------------------------------------ */
/* Models                                                             */
/* ------------------------------------------------------------------ */

PAGECAST_API pagecast_status pagecast_train(const pagecast_config *cfg,
                                            const pagecast_dataset *ds,
                                            pagecast_model **out);
PAGECAST_API void pagecast_model_free(pagecast_model *m);

PAGECAST_API pagecast_status pagecast_model_save(const pagecast_model *m, const char *path);
PAGECAST_API pagecast_status pagecast_model_load(const char *path, pagecast_model **out);

typedef struct pagecast_model_stats {
  uint64_t n_sessions;
  uint64_t n_transitions;
  uint64_t pages_before;   /* pages seen in the working cluster */
  uint64_t pages_after;    /* level-1 survivors */
  uint64_t pairs_before;   /* pairs counted over level-1 survivors */
  uint64_t pairs_after;    /* level-2 survivors */
  uint64_t rules;
} pagecast_model_stats;

PAGECAST_API pagecast_status pagecast_model_get_stats(const pagecast_model *m, pagecast_model_stats *out);

/* Canonical "key value" lines of the config the model was trained with. */
PAGECAST_API pagecast_status pagecast_model_config_text(const pagecast_model *m, const char **out);

typedef struct pagecast_rule {
  const char *antecedent;
  const char *consequent;
  double support;
  double confidence;
} pagecast_rule;

PAGECAST_API size_t pagecast_model_rule_count(const pagecast_model *m);
PAGECAST_API pagecast_status pagecast_model_rule_at(const pagecast_model *m, size_t index, pagecast_rule *out);

/* *out_url is NULL when the model abstains. */
PAGECAST_API pagecast_status pagecast_model_predict(const pagecast_model *m,
                                                    const char *current_url,
                                                    const char **out_url);

/* out_urls must have room for k pointers; *out_n receives how many were set. */
PAGECAST_API pagecast_status pagecast_model_predict_topk(const pagecast_model *m,
                                                         const char *current_url, size_t k,
                                                         const char **out_urls, size_t *out_n);

/* ------------------------------------------------------------------ */
/* Evaluation                                                         */
/* ------------------------------------------------------------------ */

typedef struct pagecast_report {
  uint64_t opportunities;
  uint64_t attempted;
  uint64_t hits;
  double accuracy;        /* hits / attempted, 0 when attempted = 0 */
  double applicability;   /* attempted / opportunities, 0 when opportunities = 0 */
  uint64_t cache_hits;
  uint64_t cache_accesses;
  double cache_hit_rate;
  uint64_t pages_before;
  uint64_t pages_after;
  uint64_t pairs_before;
  uint64_t pairs_after;
  uint64_t rules;
  uint64_t train_sessions;
  uint64_t test_sessions;
} pagecast_report;

/* Split the dataset by config seed/train fraction, train on the train part,
 * score predictions and the prefetch cache on the test part. */
PAGECAST_API pagecast_status pagecast_evaluate(const pagecast_config *cfg,
                                               const pagecast_dataset *ds,
                                               pagecast_report *out);

#ifdef __cplusplus
}
#endif

#endif /* PAGECAST_H */
