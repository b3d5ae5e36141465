#pragma once

#include "addeq/codes.hpp"
#include "addeq/errors.hpp"
#include "addeq/field.hpp"
#include "addeq/gf2.hpp"
#include "addeq/multigraph.hpp"
#include "addeq/random.hpp"
#include "addeq/reduction.hpp"
#include "addeq/signatures.hpp"
