#pragma once

/**
 * @file stern.hpp
 * @brief Convenience umbrella: the whole library in one include.
 */

#include "diatomic/altbin.hpp"
#include "diatomic/bigint.hpp"
#include "diatomic/continuant.hpp"
#include "diatomic/errors.hpp"
#include "diatomic/extremal.hpp"
#include "diatomic/fibonacci.hpp"
#include "diatomic/sequence.hpp"
#include "diatomic/shapes.hpp"
