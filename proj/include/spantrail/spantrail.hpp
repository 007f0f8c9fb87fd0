#ifndef SPANTRAIL_SPANTRAIL_HPP
#define SPANTRAIL_SPANTRAIL_HPP

#include "spantrail/cover_lemma.hpp"
#include "spantrail/cycle_search.hpp"
#include "spantrail/error.hpp"
#include "spantrail/extremal_family.hpp"
#include "spantrail/generate.hpp"
#include "spantrail/graph.hpp"
#include "spantrail/rational.hpp"
#include "spantrail/recognition.hpp"
#include "spantrail/trail_builder.hpp"

#endif // SPANTRAIL_SPANTRAIL_HPP
