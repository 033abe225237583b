/**
 * @file gaugecal.hpp
 * @brief Umbrella header for the library (the CLI front end is separate)
 */

#pragma once

#include <gaugecal/calibration.hpp>
#include <gaugecal/calibration_json.hpp>
#include <gaugecal/dataset.hpp>
#include <gaugecal/error.hpp>
#include <gaugecal/evaluation.hpp>
#include <gaugecal/imaging.hpp>
#include <gaugecal/io.hpp>
#include <gaugecal/measurement.hpp>
#include <gaugecal/plot.hpp>
#include <gaugecal/published.hpp>
#include <gaugecal/report.hpp>
#include <gaugecal/synth.hpp>
